#pragma once

#include <array>

namespace specgap {

// Matching data for the scaled step problem g_L with w_L = v0 L^2 on
// [-b/L, b/L]. Branch 0 is the even ground state, branch 1 the odd first
// excited state. On the outer piece of length l1 the eigenfunction is
// sin(omega x); on the half-barrier of length l2 it is a sinh(M x) + c cosh(M x).
struct StepMatchingState {
  double v0 = 0.0;
  double b = 0.0;
  double L = 0.0;
  double l1 = 0.0;  // 1/2 - b/L
  double l2 = 0.0;  // b/L
  std::array<double, 2> omega{};
  std::array<double, 2> M{};           // sqrt(v0 L^2 - omega^2)
  std::array<double, 2> sinh_coeff{};  // (omega / M) cos(omega l1)
  std::array<double, 2> cosh_coeff{};  // sin(omega l1)
};

// Root of the branch matching equation
//   branch 0: tan(omega l1) = -(omega / M) coth(M l2)
//   branch 1: tan(omega l1) = -(omega / M) tanh(M l2)
// with omega l1 in (pi/2, pi), by bisection. BracketError when the
// bracket is invalid (L too small for v0 L^2 > (pi / l1)^2).
double step_omega(double v0, double b, double L, int branch);

// tan(omega l1) + (omega / M) coth(M l2) (branch 0) or ... tanh(M l2) (branch 1).
double step_matching_residual(double v0, double b, double L, int branch, double omega);

StepMatchingState step_matching_state(double v0, double b, double L);

struct StepGap {
  double gap = 0.0;  // lambda_1 - lambda_0 of g_L
  double omega0 = 0.0;
  double omega1 = 0.0;
};

// (omega_1 - omega_0)(omega_1 + omega_0).
StepGap step_gap_scaled(double v0, double b, double L);

// L^-2 times the scaled gap: Gamma_v(L) of the physical step problem.
double step_gap_physical(double v0, double b, double L);

// Dirichlet Laplacian on (-1/2, 1/2) with a delta interaction of strength L
// at 0. The odd state does not see the delta (lambda_1 = 4 pi^2); the even
// ground state sin(k(x + 1/2)) solves 2k cos(k/2) + L sin(k/2) = 0, i.e.
// tan(k/2) = -2k/L, with k in [pi, 2pi).
struct DeltaComparator {
  double L = 0.0;
  double k0 = 0.0;
  double gap = 0.0;  // 4 pi^2 - k0^2
};

DeltaComparator delta_gap(double L);

// Large-L expansion of L * delta_gap(L): 32 pi^2 (1 - 6/L) + O(L^-2).
double delta_gap_asymptote(double L);

}  // namespace specgap
