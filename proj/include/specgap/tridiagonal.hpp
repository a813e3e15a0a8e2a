#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace specgap {

// The symmetric tridiagonal matrix tridiag(-1, 2 + q_i, -1), which is h^2
// times the central-difference operator -d^2/dx^2 + v with q_i = h^2 v(x_i).
//
// Pivots of the LDL^T factorisation of (A - s) are carried as r_i = d_i - 1,
// r_i = (q_i - s) + r_{i-1} / (1 + r_{i-1}), so no O(1) term is ever
// subtracted from another. Small eigenvalues (s ~ h^2 lambda << 1) then keep
// their relative accuracy, which the gap needs at large L.
class LaplacianPlusDiagonal {
 public:
  explicit LaplacianPlusDiagonal(std::vector<double> q);

  std::size_t size() const { return q_.size(); }
  std::span<const double> q() const { return q_; }

  // Number of eigenvalues strictly below s (Sturm count / Sylvester inertia).
  std::size_t count_below(double s) const;

  // Eigenvalue number `index` (0-based, ascending) by Sturm bisection.
  // Throws ConvergenceError if rel_tol is not met within the iteration budget.
  double eigenvalue(std::size_t index, double rel_tol) const;

  struct Eigenvector {
    std::vector<double> values;
    // |gamma_r| / ||x||_2: the 2-norm residual of (A - s) x.
    double residual = 0.0;
  };
  // One inverse-iteration step at shift s using the twisted factorisation
  // A - s = N_r Delta N_r^T with the twist index r minimising |gamma_r|,
  // i.e. (A - s) x = gamma_r e_r. The result is not normalised.
  Eigenvector eigenvector(double s) const;

 private:
  std::vector<double> q_;
  double q_min_ = 0.0;
  double q_max_ = 0.0;
};

// Eigenvalue `index` of tridiag(-1, 2, -1) of order n.
double free_laplacian_eigenvalue(std::size_t n, std::size_t index);

}  // namespace specgap
