#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specgap/potential.hpp"

namespace specgap {

struct SolverSettings {
  double resolution = 40.0;  // points per unit length
  unsigned workers = 0;      // 0: one per hardware thread
};

struct GapRow {
  double L = 0.0;
  double eps0 = 0.0;
  double eps1 = 0.0;
  double gap = 0.0;
  double gap_err = 0.0;
  double L2gap = 0.0;
  double L3gap = 0.0;

  bool operator==(const GapRow&) const = default;
};

struct ExcludedRow {
  double L = 0.0;
  std::string reason;
};

struct GapCurve {
  std::vector<GapRow> rows;  // L strictly increasing
  std::optional<Potential> potential;
  SolverSettings settings;
  std::vector<ExcludedRow> excluded;
};

// l_min * ratio^i for every i with the value not exceeding l_max (up to
// rounding).
std::vector<double> geometric_grid(double l_min, double l_max, double ratio);

// Physical-frame gap for every L. Rows are computed concurrently but the
// curve is always ordered by L; a row whose solve fails is listed in
// `excluded` instead of aborting the sweep.
GapCurve sweep(const Potential& p, std::span<const double> L_grid, const SolverSettings& settings);

struct FitWindow {
  double l_min = 0.0;
  double l_max = 0.0;
};

// The upper half of the rows (the larger half when the count is odd).
FitWindow top_half_window(const GapCurve& curve);
FitWindow full_window(const GapCurve& curve);

struct ExponentFit {
  double p = 0.0;      // Gamma ~ exp(log_c) L^-p
  double log_c = 0.0;
  double residual = 0.0;  // RMS of the log residuals
  FitWindow window;
  std::size_t rows = 0;
};

inline constexpr std::size_t kMinFitRows = 5;

// Least squares of log Gamma against log L over rows inside the window.
// WindowError with fewer than kMinFitRows rows.
ExponentFit fit_exponent(const GapCurve& curve, FitWindow window);

struct BoundReport {
  std::string name;
  std::vector<double> L;
  std::vector<double> margin;  // positive when the row satisfies the check
  bool pass = false;
  double worst_margin = 0.0;
  bool hypothesis_met = true;
  std::string detail;
};

enum class HypothesisPolicy {
  Require,   // HypothesisError when the potential is outside the class
  Evaluate,  // run anyway and record hypothesis_met = false
};

// Gamma(L) <= (64 pi^2 + 16 C) / L^2 on every row (slack: gap_err).
BoundReport check_upper_bound_short_range(const GapCurve& curve, double C);

// Gamma(L) <= 3 pi^2 / L^2 on every row (slack: gap_err).
BoundReport check_upper_bound_symmetric(const GapCurve& curve);

// L^2 Gamma strictly decreasing over the top half of the grid and
// last / first <= max_ratio.
BoundReport check_vanishing_rescaled(const GapCurve& curve, double max_ratio = 0.5,
                                     HypothesisPolicy policy = HypothesisPolicy::Require);

struct ScaledLimitRow {
  double L = 0.0;
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double dist0 = 0.0;  // |lambda0 - 4 pi^2|
  double dist1 = 0.0;  // |lambda1 - 4 pi^2|
  double phi0_mid = 0.0;  // |phi_0(0)| of the normalised scaled ground state
  double resolution = 0.0;
};

struct ScaledLimitTable {
  std::vector<ScaledLimitRow> rows;
  bool distances_decreasing = false;  // both columns, top half of the grid
  bool phi0_mid_decreasing = false;   // whole grid
};

// Scaled-frame eigenvalues per L at a resolution raised where needed to
// resolve the shrinking support of w_L. HypothesisError unless the potential
// is non-zero and compactly supported or decays faster than |x|^-2.
ScaledLimitTable scaled_eigen_limits(const Potential& p, std::span<const double> L_grid,
                                     const SolverSettings& settings);

}  // namespace specgap
