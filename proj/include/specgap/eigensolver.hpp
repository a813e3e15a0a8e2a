#pragma once

#include <cstddef>
#include <vector>

#include "specgap/potential.hpp"

namespace specgap {

// Physical: -d^2/dx^2 + t v on (-L/2, L/2).
// Scaled:   -d^2/dx^2 + t w_L on (-1/2, 1/2), w_L(x) = L^2 v(L x); its
//           eigenvalues are L^2 times the physical ones.
enum class Frame { Physical, Scaled };

struct ProblemSpec {
  Potential potential;
  double L = 1.0;
  Frame frame = Frame::Physical;
  double t_coupling = 1.0;

  void validate() const;
  double left() const { return frame == Frame::Physical ? -0.5 * L : -0.5; }
  double right() const { return frame == Frame::Physical ? 0.5 * L : 0.5; }
  double length() const { return right() - left(); }
  // Potential term of the operator in this frame, including the coupling.
  double potential_at(double x) const;
  // Jump locations in frame coordinates that lie strictly inside the interval.
  std::vector<double> jumps() const;
  // Jumps and kinks of the potential in frame coordinates, strictly inside.
  std::vector<double> breakpoints() const;
};

// Uniform grid of n interior nodes on (a, b); the Dirichlet nodes a and b are
// implicit.
struct Grid {
  double a = 0.0;
  double b = 1.0;
  std::size_t n = 16;

  double spacing() const { return (b - a) / static_cast<double>(n + 1); }
  double node(std::size_t i) const { return a + static_cast<double>(i + 1) * spacing(); }
  Grid refined() const { return {a, b, 2 * n + 1}; }
};

inline constexpr std::size_t kMinInteriorNodes = 16;
inline constexpr int kMaxEigenvalues = 8;
inline constexpr double kMinNodesPerFeature = 32.0;
inline constexpr double kBisectionRelTol = 1e-13;

// Coarse grid for a points-per-unit-length resolution.
Grid make_grid(const ProblemSpec& spec, double resolution);

// Smallest resolution placing kMinNodesPerFeature nodes across the narrowest
// feature of the potential (0 when there is nothing to resolve).
double minimum_resolution(const ProblemSpec& spec);

// Potential values at the grid nodes. A node whose hat function support
// [x - h, x + h] contains a jump or kink takes the hat-weighted average
// (1/h) * integral of v(y) (1 - |y - x|/h), so a node sitting exactly on a
// jump of a piecewise constant potential gets the mean of the two limits.
std::vector<double> sample_potential(const ProblemSpec& spec, const Grid& grid);

// The k lowest eigenvalues of the central-difference matrix on `grid`,
// without extrapolation.
std::vector<double> fd_eigenvalues(const ProblemSpec& spec, const Grid& grid, int k);

struct SpectrumResult {
  std::vector<double> eigenvalues;      // Richardson-extrapolated
  std::vector<double> error_estimates;  // |lambda_{h/2} - lambda_h| / 3
  // Sampled on the interior nodes of `grid`, unit L^2 norm (trapezoid),
  // first node positive.
  std::vector<std::vector<double>> eigenfunctions;
  Grid grid;  // the fine grid
};

struct SolveOptions {
  bool eigenfunctions = true;
};

SpectrumResult lowest_eigenvalues_fd(const ProblemSpec& spec, int k, double resolution,
                                     SolveOptions options = {});

struct GapEstimate {
  double gap = 0.0;
  double gap_error = 0.0;
  double eps0 = 0.0;
  double eps1 = 0.0;
  double resolution = 0.0;  // resolution actually used
};

// eps1 - eps0 with the summed error estimates. If the error exceeds a tenth
// of the gap the solve is repeated once at doubled resolution; PrecisionError
// if that does not help.
GapEstimate spectral_gap(const ProblemSpec& spec, double resolution);

// Strict sign changes between adjacent samples of eigenfunction `index`.
int eigenfunction_nodes(const SpectrumResult& result, std::size_t index);

// Linear interpolation of eigenfunction `index` at x, zero at the walls.
double eigenfunction_at(const SpectrumResult& result, std::size_t index, double x);

}  // namespace specgap
