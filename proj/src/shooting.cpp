#include "specgap/shooting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "specgap/bisection.hpp"
#include "specgap/errors.hpp"

namespace specgap {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kTightTol = 1e-12;
constexpr double kLooseTol = 1e-10;
constexpr double kLambdaRelTol = 1e-14;
// Largest integrator step as a fraction of the potential's feature width.
constexpr double kMaxStepPerFeature = 0.125;

using State = std::array<double, 1>;

double eigenvalue_at(const ProblemSpec& spec, std::size_t index, double tol) {
  const double target = static_cast<double>(index + 1) * std::numbers::pi;
  const double free = std::pow(target / spec.length(), 2);
  const double vmax = spec.t_coupling * spec.potential.sup() *
                      (spec.frame == Frame::Scaled ? spec.L * spec.L : 1.0);
  // Min-max: the free eigenvalue shifted by the range of the potential.
  const double lo = free * (1.0 - 1e-9);
  const double hi = (free + vmax) * (1.0 + 1e-9);
  try {
    return bisect([&](double lam) { return prufer_phase(spec, lam, tol) - target; }, lo, hi,
                  kLambdaRelTol);
  } catch (const ConvergenceError&) {
    throw;
  } catch (const BracketError& e) {
    throw ConvergenceError(std::string("shooting bracket failed: ") + e.what());
  }
}

}  // namespace

double prufer_phase(const ProblemSpec& spec, double lambda, double tol) {
  if (!(lambda > 0.0)) throw std::invalid_argument("Prüfer shooting needs lambda > 0");
  const double S = std::sqrt(lambda);
  auto rhs = [&](const State& th, State& dth, double x) {
    const double c = std::cos(th[0]);
    const double s = std::sin(th[0]);
    dth[0] = S * c * c + ((lambda - spec.potential_at(x)) / S) * s * s;
  };

  std::vector<double> knots{spec.left()};
  for (double j : spec.breakpoints()) knots.push_back(j);
  knots.push_back(spec.right());

  double max_dt = spec.length();
  if (const auto w = spec.potential.feature_width(); w && spec.t_coupling > 0.0)
    max_dt = std::min(max_dt, kMaxStepPerFeature * (spec.frame == Frame::Physical ? *w : *w / spec.L));

  State theta{0.0};
  auto stepper = odeint::make_controlled(tol, tol, max_dt, odeint::runge_kutta_dopri5<State>());
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    if (!(b > a)) continue;
    // Sample the open segment so the integrator never evaluates V on a jump.
    const double margin = 1e-14 * std::max({1.0, std::abs(a), std::abs(b)});
    const double dx0 = std::min((b - a) / 64.0, 0.1 / S);
    odeint::integrate_adaptive(stepper, rhs, theta, a + margin * (i > 0), b - margin * (i + 2 < knots.size()),
                               dx0);
  }
  return theta[0];
}

ShootingResult shooting_oracle(const ProblemSpec& spec, int k) {
  spec.validate();
  if (k < 1 || k > kMaxEigenvalues) throw std::invalid_argument("k must lie in 1..8");
  ShootingResult out;
  for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
    const double tight = eigenvalue_at(spec, j, kTightTol);
    const double loose = eigenvalue_at(spec, j, kLooseTol);
    out.eigenvalues.push_back(tight);
    out.error_estimates.push_back(std::abs(tight - loose) + 4.0 * kLambdaRelTol * tight);
  }
  return out;
}

}  // namespace specgap
