#include "specgap/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "specgap/eigensolver.hpp"
#include "specgap/errors.hpp"

namespace specgap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPiSq = 4.0 * kPi * kPi;

void validate_sweep_grid(std::span<const double> grid) {
  if (grid.size() < 6) throw std::invalid_argument("sweep grid needs at least 6 points");
  if (!(grid[0] > 0.0)) throw std::invalid_argument("sweep grid must be positive");
  const double ratio = grid[1] / grid[0];
  if (!(ratio >= 1.2 - 1e-12 && ratio <= 4.0 + 1e-12))
    throw std::invalid_argument("sweep grid ratio must lie in [1.2, 4]");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(grid[i] / grid[i - 1] - ratio) > 1e-9 * ratio)
      throw std::invalid_argument("sweep grid must be geometric");
  }
}

const Potential& require_potential(const GapCurve& curve) {
  if (!curve.potential) throw HypothesisError("curve carries no potential descriptor");
  return *curve.potential;
}

std::size_t top_half_start(std::size_t n) { return n / 2; }

BoundReport upper_bound_report(std::string name, const GapCurve& curve, double numerator) {
  BoundReport r;
  r.name = std::move(name);
  r.pass = !curve.rows.empty();
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& row : curve.rows) {
    const double margin = numerator / (row.L * row.L) - row.gap;
    r.L.push_back(row.L);
    r.margin.push_back(margin);
    r.worst_margin = std::min(r.worst_margin, margin);
    if (margin < -row.gap_err) r.pass = false;
  }
  return r;
}

}  // namespace

std::vector<double> geometric_grid(double l_min, double l_max, double ratio) {
  if (!(l_min > 0.0) || !(l_max >= l_min) || !(ratio > 1.0))
    throw std::invalid_argument("geometric grid needs 0 < l_min <= l_max and ratio > 1");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double L = l_min * std::pow(ratio, i);
    if (L > l_max * (1.0 + 1e-9)) break;
    out.push_back(L);
  }
  return out;
}

GapCurve sweep(const Potential& p, std::span<const double> L_grid, const SolverSettings& settings) {
  validate_sweep_grid(L_grid);
  struct Slot {
    std::optional<GapRow> row;
    std::string failure;
  };
  std::vector<Slot> slots(L_grid.size());
  detail::parallel_for(L_grid.size(), settings.workers, [&](std::size_t i) {
    const double L = L_grid[i];
    try {
      const auto g = spectral_gap(ProblemSpec{p, L, Frame::Physical, 1.0}, settings.resolution);
      slots[i].row = GapRow{L, g.eps0, g.eps1, g.gap, g.gap_error, L * L * g.gap, L * L * L * g.gap};
    } catch (const Error& e) {
      slots[i].failure = e.what();
    }
  });

  GapCurve curve;
  curve.potential = p;
  curve.settings = settings;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].row && slots[i].row->gap > 0.0)
      curve.rows.push_back(*slots[i].row);
    else
      curve.excluded.push_back({L_grid[i], slots[i].row ? "non-positive gap" : slots[i].failure});
  }
  return curve;
}

FitWindow top_half_window(const GapCurve& curve) {
  if (curve.rows.empty()) throw WindowError("empty curve");
  return {curve.rows[top_half_start(curve.rows.size())].L, curve.rows.back().L};
}

FitWindow full_window(const GapCurve& curve) {
  if (curve.rows.empty()) throw WindowError("empty curve");
  return {curve.rows.front().L, curve.rows.back().L};
}

ExponentFit fit_exponent(const GapCurve& curve, FitWindow window) {
  std::vector<double> xs, ys;
  for (const auto& row : curve.rows) {
    if (row.L < window.l_min * (1.0 - 1e-12) || row.L > window.l_max * (1.0 + 1e-12)) continue;
    if (!(row.gap > 0.0)) continue;
    xs.push_back(std::log(row.L));
    ys.push_back(std::log(row.gap));
  }
  if (xs.size() < kMinFitRows) {
    std::ostringstream msg;
    msg << "fit window [" << window.l_min << ", " << window.l_max << "] selects " << xs.size()
        << " rows; need " << kMinFitRows;
    throw WindowError(msg.str());
  }
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss += r * r;
  }
  ExponentFit fit;
  fit.p = -slope;
  fit.log_c = intercept;
  fit.residual = std::sqrt(ss / n);
  fit.window = window;
  fit.rows = xs.size();
  return fit;
}

BoundReport check_upper_bound_short_range(const GapCurve& curve, double C) {
  const auto cls = classify(require_potential(curve));
  if (!cls.short_range_C || *cls.short_range_C > C * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "upper bound I needs v(x) <= C/x^2 with C = " << C << "; "
        << curve.potential->describe();
    if (cls.short_range_C)
      msg << " needs C >= " << *cls.short_range_C;
    else
      msg << " is not short range";
    throw HypothesisError(msg.str());
  }
  auto r = upper_bound_report("upper-bound-I", curve, 64.0 * kPi * kPi + 16.0 * C);
  std::ostringstream detail;
  detail << "Gamma <= (64 pi^2 + 16 C)/L^2 with C = " << C;
  r.detail = detail.str();
  return r;
}

BoundReport check_upper_bound_symmetric(const GapCurve& curve) {
  const auto cls = classify(require_potential(curve));
  if (!cls.symmetric_single_well)
    throw HypothesisError("upper bound II needs a symmetric single-well potential; got " +
                          curve.potential->describe());
  auto r = upper_bound_report("upper-bound-II", curve, 3.0 * kPi * kPi);
  r.detail = "Gamma <= 3 pi^2/L^2";
  return r;
}

BoundReport check_vanishing_rescaled(const GapCurve& curve, double max_ratio, HypothesisPolicy policy) {
  const auto cls = classify(require_potential(curve));
  BoundReport r;
  r.name = "vanishing-rescaled";
  r.hypothesis_met = cls.fast_decay();
  if (!r.hypothesis_met && policy == HypothesisPolicy::Require)
    throw HypothesisError("L^2 Gamma -> 0 needs a non-zero potential decaying faster than |x|^-2; got " +
                          curve.potential->describe());
  const auto& rows = curve.rows;
  if (rows.size() < 2) throw WindowError("vanishing check needs at least two rows");

  r.pass = true;
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = top_half_start(rows.size()) + 1; i < rows.size(); ++i) {
    const double margin = rows[i - 1].L2gap - rows[i].L2gap;
    r.L.push_back(rows[i].L);
    r.margin.push_back(margin);
    r.worst_margin = std::min(r.worst_margin, margin);
    if (!(margin > 0.0)) r.pass = false;
  }
  const double ratio = rows.back().L2gap / rows.front().L2gap;
  if (!(ratio <= max_ratio)) r.pass = false;
  std::ostringstream msg;
  msg << "L^2 Gamma last/first = " << ratio << " (threshold " << max_ratio << ")";
  r.detail = msg.str();
  return r;
}

ScaledLimitTable scaled_eigen_limits(const Potential& p, std::span<const double> L_grid,
                                     const SolverSettings& settings) {
  if (!classify(p).fast_decay())
    throw HypothesisError("scaled eigenvalue limits need a non-zero potential decaying faster than "
                          "|x|^-2; got " + p.describe());
  ScaledLimitTable table;
  table.rows.resize(L_grid.size());
  detail::parallel_for(L_grid.size(), settings.workers, [&](std::size_t i) {
    const ProblemSpec spec{p, L_grid[i], Frame::Scaled, 1.0};
    const double res = std::max(settings.resolution, minimum_resolution(spec));
    const auto result = lowest_eigenvalues_fd(spec, 2, res);
    auto& row = table.rows[i];
    row.L = L_grid[i];
    row.lambda0 = result.eigenvalues[0];
    row.lambda1 = result.eigenvalues[1];
    row.dist0 = std::abs(row.lambda0 - kFourPiSq);
    row.dist1 = std::abs(row.lambda1 - kFourPiSq);
    row.phi0_mid = std::abs(eigenfunction_at(result, 0, 0.0));
    row.resolution = res;
  });

  const auto& rows = table.rows;
  table.distances_decreasing = rows.size() >= 2;
  for (std::size_t i = top_half_start(rows.size()) + 1; i < rows.size(); ++i) {
    if (!(rows[i].dist0 < rows[i - 1].dist0) || !(rows[i].dist1 < rows[i - 1].dist1))
      table.distances_decreasing = false;
  }
  table.phi0_mid_decreasing = rows.size() >= 2;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].phi0_mid < rows[i - 1].phi0_mid)) table.phi0_mid_decreasing = false;
  return table;
}

}  // namespace specgap
