#include "specgap/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "specgap/errors.hpp"
#include "specgap/tridiagonal.hpp"

namespace specgap {

namespace {

// Residual of the inverse-iteration eigenvector, relative to the shift
// (both in units of h^2).
constexpr double kEigenvectorResidualTol = 1e-6;

std::vector<double> to_h2_units(const ProblemSpec& spec, const Grid& grid) {
  auto q = sample_potential(spec, grid);
  const double h2 = grid.spacing() * grid.spacing();
  for (double& v : q) v *= h2;
  return q;
}

void check_k(int k) {
  if (k < 1 || k > kMaxEigenvalues)
    throw std::invalid_argument("k must lie in 1.." + std::to_string(kMaxEigenvalues));
}

void check_resolution(const ProblemSpec& spec, const Grid& grid, double resolution) {
  const double needed = minimum_resolution(spec);
  if (needed <= 0.0) return;
  const double width = kMinNodesPerFeature / needed;
  if (width / grid.spacing() < kMinNodesPerFeature * (1.0 - 1e-9)) {
    std::ostringstream msg;
    msg << "resolution " << resolution << " leaves fewer than " << kMinNodesPerFeature
        << " nodes across a feature of width " << width << "; need at least " << needed;
    throw ResolutionError(msg.str());
  }
}

}  // namespace

void ProblemSpec::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("L must be positive and finite");
  if (!(t_coupling >= 0.0) || !std::isfinite(t_coupling))
    throw std::invalid_argument("coupling t must be non-negative and finite");
}

double ProblemSpec::potential_at(double x) const {
  if (t_coupling == 0.0) return 0.0;
  const double v = frame == Frame::Physical ? potential.eval(x) : potential.scaled_eval(L, x);
  return t_coupling * v;
}

namespace {

std::vector<double> to_frame(const ProblemSpec& spec, const std::vector<double>& points) {
  std::vector<double> out;
  if (spec.t_coupling == 0.0) return out;
  for (double j : points) {
    const double x = spec.frame == Frame::Physical ? j : j / spec.L;
    if (x > spec.left() && x < spec.right()) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<double> ProblemSpec::jumps() const { return to_frame(*this, potential.jumps()); }

std::vector<double> ProblemSpec::breakpoints() const { return to_frame(*this, potential.breakpoints()); }

Grid make_grid(const ProblemSpec& spec, double resolution) {
  spec.validate();
  if (!(resolution > 0.0) || !std::isfinite(resolution))
    throw std::invalid_argument("resolution must be positive");
  const double cells = std::ceil(resolution * spec.length() - 1e-9);
  const auto n = std::max<std::size_t>(kMinInteriorNodes, static_cast<std::size_t>(cells) - 1);
  return {spec.left(), spec.right(), n};
}

double minimum_resolution(const ProblemSpec& spec) {
  if (spec.t_coupling == 0.0) return 0.0;
  const auto w = spec.potential.feature_width();
  if (!w) return 0.0;
  double width = spec.frame == Frame::Physical ? *w : *w / spec.L;
  width = std::min(width, spec.length());
  return kMinNodesPerFeature / width;
}

std::vector<double> sample_potential(const ProblemSpec& spec, const Grid& grid) {
  std::vector<double> v(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) v[i] = spec.potential_at(grid.node(i));

  const double h = grid.spacing();
  const auto jumps = spec.breakpoints();
  if (jumps.empty()) return v;

  // Breakpoints this close to a support edge or to the node count as on it.
  constexpr double kBreakpointTol = 1e-9;
  // 3-point Gauss-Legendre on [-1, 1].
  constexpr double kGx = 0.7745966692414834;
  constexpr double kGw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  const double gx[3] = {-kGx, 0.0, kGx};

  std::vector<bool> done(grid.n, false);
  for (double jump : jumps) {
    const auto nearest = static_cast<long>(std::floor((jump - grid.a) / h)) - 1;
    for (long i = std::max(0L, nearest - 1); i <= std::min<long>(nearest + 2, grid.n - 1); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double x = grid.node(ui);
      const double lo = x - h;
      const double hi = x + h;
      const double tol = kBreakpointTol * h;
      if (done[ui] || !(jump > lo + tol && jump < hi - tol)) continue;
      done[ui] = true;
      std::vector<double> cuts{lo, x};
      for (double j : jumps)
        if (j > lo + tol && j < hi - tol && std::abs(j - x) > tol) cuts.push_back(j);
      cuts.push_back(hi);
      std::sort(cuts.begin(), cuts.end());
      double sum = 0.0;
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double mid = 0.5 * (cuts[c] + cuts[c + 1]);
        const double half = 0.5 * (cuts[c + 1] - cuts[c]);
        for (int g = 0; g < 3; ++g) {
          const double y = mid + half * gx[g];
          sum += kGw[g] * half * (1.0 - std::abs(y - x) / h) * spec.potential_at(y);
        }
      }
      v[ui] = sum / h;
    }
  }
  return v;
}

std::vector<double> fd_eigenvalues(const ProblemSpec& spec, const Grid& grid, int k) {
  check_k(k);
  const LaplacianPlusDiagonal matrix(to_h2_units(spec, grid));
  const double h2 = grid.spacing() * grid.spacing();
  std::vector<double> out(static_cast<std::size_t>(k));
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = matrix.eigenvalue(j, kBisectionRelTol) / h2;
  return out;
}

SpectrumResult lowest_eigenvalues_fd(const ProblemSpec& spec, int k, double resolution,
                                     SolveOptions options) {
  check_k(k);
  const Grid coarse = make_grid(spec, resolution);
  check_resolution(spec, coarse, resolution);
  const Grid fine = coarse.refined();

  const auto coarse_values = fd_eigenvalues(spec, coarse, k);
  const LaplacianPlusDiagonal matrix(to_h2_units(spec, fine));
  const double h2 = fine.spacing() * fine.spacing();

  SpectrumResult out;
  out.grid = fine;
  std::vector<double> shifts(static_cast<std::size_t>(k));
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    shifts[j] = matrix.eigenvalue(j, kBisectionRelTol);
    const double lam_fine = shifts[j] / h2;
    const double lam_coarse = coarse_values[j];
    const double err = std::abs(lam_fine - lam_coarse) / 3.0;
    out.eigenvalues.push_back((4.0 * lam_fine - lam_coarse) / 3.0);
    out.error_estimates.push_back(std::max(err, 4.0 * kBisectionRelTol * std::abs(lam_fine)));
  }

  if (!options.eigenfunctions) return out;

  const double h = fine.spacing();
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    auto vec = matrix.eigenvector(shifts[j]);
    if (!(vec.residual <= kEigenvectorResidualTol * shifts[j])) {
      throw ConvergenceError("inverse iteration for eigenfunction " + std::to_string(j) +
                             " left residual " + std::to_string(vec.residual));
    }
    auto& phi = vec.values;
    double norm2 = 0.0;
    for (double v : phi) norm2 += v * v;
    double scale = 1.0 / std::sqrt(h * norm2);
    if (phi.front() < 0.0) scale = -scale;
    for (double& v : phi) v *= scale;
    out.eigenfunctions.push_back(std::move(phi));
  }
  return out;
}

GapEstimate spectral_gap(const ProblemSpec& spec, double resolution) {
  auto attempt = [&](double res) {
    const auto r = lowest_eigenvalues_fd(spec, 2, res, {.eigenfunctions = false});
    GapEstimate g;
    g.eps0 = r.eigenvalues[0];
    g.eps1 = r.eigenvalues[1];
    g.gap = g.eps1 - g.eps0;
    g.gap_error = r.error_estimates[0] + r.error_estimates[1];
    g.resolution = res;
    return g;
  };
  auto healthy = [](const GapEstimate& g) { return g.gap > 0.0 && g.gap_error <= 0.1 * g.gap; };

  GapEstimate g = attempt(resolution);
  if (healthy(g)) return g;
  g = attempt(2.0 * resolution);
  if (healthy(g)) return g;
  std::ostringstream msg;
  msg << "gap " << g.gap << " not resolved: error estimate " << g.gap_error << " at resolution "
      << g.resolution;
  throw PrecisionError(msg.str());
}

int eigenfunction_nodes(const SpectrumResult& result, std::size_t index) {
  const auto& phi = result.eigenfunctions.at(index);
  int changes = 0;
  int last_sign = 0;
  for (double v : phi) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

double eigenfunction_at(const SpectrumResult& result, std::size_t index, double x) {
  const auto& phi = result.eigenfunctions.at(index);
  const Grid& g = result.grid;
  if (x <= g.a || x >= g.b) return 0.0;
  const double h = g.spacing();
  const double pos = (x - g.a) / h;  // 0 at the left wall, n+1 at the right wall
  const auto cell = std::min(static_cast<std::size_t>(pos), g.n);
  const double frac = pos - static_cast<double>(cell);
  auto value = [&](std::size_t node) { return node == 0 || node == g.n + 1 ? 0.0 : phi[node - 1]; };
  return (1.0 - frac) * value(cell) + frac * value(cell + 1);
}

}  // namespace specgap
