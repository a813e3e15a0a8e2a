#pragma once

#include <optional>
#include <span>
#include <vector>

#include "specgap/eigensolver.hpp"

namespace specgap {

// psi(x) = |phi_1(x)|^2 - |phi_0(x)|^2 on the solver's fine grid (interior
// nodes; psi vanishes at the walls).
struct DensityDifference {
  Grid grid;
  std::vector<double> psi;
  // Innermost sign change of psi on the positive half-axis, linearly
  // interpolated; nullopt when psi does not change sign there.
  std::optional<double> crossing_radius;

  // Trapezoid integral of psi.
  double integral() const;
  // Trapezoid integral of f * psi for f sampled on the same nodes.
  double integrate_against(std::span<const double> f) const;
  // max |psi(x) - psi(-x)| over mirrored node pairs.
  double asymmetry() const;
  // Sign changes of psi on x > 0.
  int positive_axis_crossings() const;
};

DensityDifference psi_L(const ProblemSpec& spec, double resolution);

// d/dt Gamma_{t v}(L) = integral of v psi, evaluated at t = spec.t_coupling
// for the potential p (which must be spec.potential).
double gap_derivative(const ProblemSpec& spec, const Potential& p, double resolution);

struct TSweepRow {
  double t = 0.0;
  double gap = 0.0;
  double hf_deriv = 0.0;
  double fd_deriv = 0.0;
};

inline constexpr double kCouplingStep = 1e-3;

// Gap and both derivative estimates along v_t = t v in the physical frame.
// The finite-difference derivative is centred with step kCouplingStep; rows
// with t < kCouplingStep use the one-sided second-order stencil so the
// coupling never goes negative.
std::vector<TSweepRow> t_sweep(const Potential& p, double L, std::span<const double> t_grid,
                               double resolution, unsigned workers = 0);

}  // namespace specgap
