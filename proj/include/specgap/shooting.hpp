#pragma once

#include <vector>

#include "specgap/eigensolver.hpp"

namespace specgap {

struct ShootingResult {
  std::vector<double> eigenvalues;
  // Spread between a tight and a loose integration tolerance plus the final
  // bisection bracket.
  std::vector<double> error_estimates;
};

// Independent oracle for the k lowest eigenvalues: integrate the scaled
// Prüfer phase
//     theta' = S cos^2(theta) + ((lambda - V(x)) / S) sin^2(theta),  S = sqrt(lambda),
// from theta(a) = 0 across the interval (restarting the adaptive integrator
// at every jump of V), and bisect lambda until theta(b) = (n + 1) pi.
ShootingResult shooting_oracle(const ProblemSpec& spec, int k);

// Terminal Prüfer phase theta(b) for a trial eigenvalue.
double prufer_phase(const ProblemSpec& spec, double lambda, double tol);

}  // namespace specgap
