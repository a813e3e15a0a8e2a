#include "specgap/step_delta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "specgap/bisection.hpp"
#include "specgap/errors.hpp"

namespace specgap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOmegaRelTol = 1e-15;
// Below this relative splitting omega_1 - omega_0 is taken from the
// first-order expansion instead of subtracting the two roots.
constexpr double kSplitRelThreshold = 1e-7;

void check_step(double v0, double b, double L, int branch) {
  if (branch != 0 && branch != 1) throw std::invalid_argument("branch must be 0 or 1");
  if (!(v0 > 0.0) || !(b > 0.0) || !(L > 0.0) || !std::isfinite(v0 * b * L))
    throw std::invalid_argument("step matching needs v0, b, L > 0");
  const double l1 = 0.5 - b / L;
  if (!(l1 > 0.0) || !(v0 * L * L > std::pow(kPi / l1, 2))) {
    std::ostringstream msg;
    msg << "step matching bracket invalid for v0=" << v0 << ", b=" << b << ", L=" << L
        << ": need L > 2b and v0 L^2 > (pi/l1)^2";
    throw BracketError(msg.str());
  }
}

// Pole-free form of the matching equation, divided by cosh(M l2):
//   branch 0: omega cos(omega l1) + M sin(omega l1) tanh(M l2)
//   branch 1: omega cos(omega l1) tanh(M l2) + M sin(omega l1)
double matching(double v0, double L, double l1, double l2, int branch, double omega) {
  const double M = std::sqrt(v0 * L * L - omega * omega);
  const double t = std::tanh(M * l2);
  const double c = std::cos(omega * l1);
  const double s = std::sin(omega * l1);
  return branch == 0 ? omega * c + M * s * t : omega * c * t + M * s;
}

// omega_1 - omega_0 to first order in the barrier transmission. Both branches
// are H(omega) + omega cos(omega l1) (f_j(M l2) - 1) = 0 with
// H = M sin(omega l1) + omega cos(omega l1), f_0 = coth, f_1 = tanh, so the
// roots sit at omega* - omega* cos(omega* l1) (f_j - 1) / H'(omega*), H(omega*) = 0.
double split_first_order(double v0, double L, double l1, double l2) {
  auto H = [&](double w) {
    const double M = std::sqrt(v0 * L * L - w * w);
    return M * std::sin(w * l1) + w * std::cos(w * l1);
  };
  const double w = bisect(H, 0.5 * kPi / l1, kPi / l1, kOmegaRelTol);
  const double M = std::sqrt(v0 * L * L - w * w);
  const double c = std::cos(w * l1);
  const double s = std::sin(w * l1);
  const double dH = -(w / M) * s + M * l1 * c + c - w * l1 * s;
  return w * c * (2.0 / std::sinh(2.0 * M * l2)) / dH;
}

}  // namespace

double step_omega(double v0, double b, double L, int branch) {
  check_step(v0, b, L, branch);
  const double l1 = 0.5 - b / L;
  const double l2 = b / L;
  return bisect([&](double w) { return matching(v0, L, l1, l2, branch, w); }, 0.5 * kPi / l1,
                kPi / l1, kOmegaRelTol);
}

double step_matching_residual(double v0, double b, double L, int branch, double omega) {
  const double l1 = 0.5 - b / L;
  const double l2 = b / L;
  const double M = std::sqrt(v0 * L * L - omega * omega);
  const double t = std::tanh(M * l2);
  const double rhs = branch == 0 ? (omega / M) / t : (omega / M) * t;
  return std::tan(omega * l1) + rhs;
}

StepMatchingState step_matching_state(double v0, double b, double L) {
  StepMatchingState st;
  st.v0 = v0;
  st.b = b;
  st.L = L;
  st.l1 = 0.5 - b / L;
  st.l2 = b / L;
  for (int j = 0; j < 2; ++j) {
    const double w = step_omega(v0, b, L, j);
    st.omega[j] = w;
    st.M[j] = std::sqrt(v0 * L * L - w * w);
    st.sinh_coeff[j] = (w / st.M[j]) * std::cos(w * st.l1);
    st.cosh_coeff[j] = std::sin(w * st.l1);
  }
  return st;
}

StepGap step_gap_scaled(double v0, double b, double L) {
  const double w0 = step_omega(v0, b, L, 0);
  const double w1 = step_omega(v0, b, L, 1);
  double split = w1 - w0;
  if (split < kSplitRelThreshold * w1) split = split_first_order(v0, L, 0.5 - b / L, b / L);
  return {split * (w1 + w0), w0, w1};
}

double step_gap_physical(double v0, double b, double L) {
  return step_gap_scaled(v0, b, L).gap / (L * L);
}

DeltaComparator delta_gap(double L) {
  if (!(L >= 0.0) || !std::isfinite(L)) throw std::invalid_argument("delta strength must be >= 0");
  const double k0 = bisect([L](double k) { return 2.0 * k * std::cos(0.5 * k) + L * std::sin(0.5 * k); },
                           kPi, 2.0 * kPi, kOmegaRelTol);
  return {L, k0, 4.0 * kPi * kPi - k0 * k0};
}

double delta_gap_asymptote(double L) { return 32.0 * kPi * kPi * (1.0 - 6.0 / L); }

}  // namespace specgap
