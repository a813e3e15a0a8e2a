#include "specgap/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "specgap/errors.hpp"

namespace specgap {

namespace {

constexpr double kTinyPivot = 1e-290;
constexpr double kRescale = 1e150;

double guard(double d) { return std::abs(d) < kTinyPivot ? std::copysign(kTinyPivot, d) : d; }

}  // namespace

LaplacianPlusDiagonal::LaplacianPlusDiagonal(std::vector<double> q) : q_(std::move(q)) {
  if (q_.empty()) throw std::invalid_argument("empty tridiagonal matrix");
  const auto [lo, hi] = std::minmax_element(q_.begin(), q_.end());
  q_min_ = *lo;
  q_max_ = *hi;
}

std::size_t LaplacianPlusDiagonal::count_below(double s) const {
  std::size_t negatives = 0;
  double carry = 1.0;  // r_{i-1} / d_{i-1}, equal to 1 before the first row
  for (double qi : q_) {
    const double r = (qi - s) + carry;
    const double d = guard(1.0 + r);
    if (d < 0.0) ++negatives;
    carry = r / d;
  }
  return negatives;
}

double LaplacianPlusDiagonal::eigenvalue(std::size_t index, double rel_tol) const {
  if (index >= q_.size()) throw std::invalid_argument("eigenvalue index out of range");
  // Weyl: A0 + q_min <= A <= A0 + q_max.
  const double free = free_laplacian_eigenvalue(q_.size(), index);
  double lo = free + q_min_;
  double hi = (free + q_max_) * (1.0 + 1e-12) + 1e-300;
  while (count_below(hi) <= index) hi *= 2.0;

  constexpr int kBudget = 400;
  for (int it = 0; it < kBudget; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * hi || mid <= lo || mid >= hi) return mid;
    if (count_below(mid) > index)
      hi = mid;
    else
      lo = mid;
  }
  throw ConvergenceError("Sturm bisection for eigenvalue " + std::to_string(index) +
                         " did not reach relative tolerance");
}

LaplacianPlusDiagonal::Eigenvector LaplacianPlusDiagonal::eigenvector(double s) const {
  const std::size_t n = q_.size();
  // Top-down pivots d_i and bottom-up pivots e_i, plus the carries entering
  // row i from above and from below.
  std::vector<double> d(n), e(n), from_above(n), from_below(n);
  double carry = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    from_above[i] = carry;
    const double r = (q_[i] - s) + carry;
    d[i] = guard(1.0 + r);
    carry = r / d[i];
  }
  carry = 1.0;
  for (std::size_t i = n; i-- > 0;) {
    from_below[i] = carry;
    const double r = (q_[i] - s) + carry;
    e[i] = guard(1.0 + r);
    carry = r / e[i];
  }

  std::size_t twist = 0;
  double gamma = std::abs((q_[0] - s) + from_above[0] + from_below[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const double g = std::abs((q_[i] - s) + from_above[i] + from_below[i]);
    if (g < gamma) {
      gamma = g;
      twist = i;
    }
  }

  // d_i = x_{i+1} / x_i above the twist, e_i = x_{i-1} / x_i below it.
  std::vector<double> x(n, 0.0);
  x[twist] = 1.0;
  double scale = 1.0;  // x has been multiplied by this factor overall
  for (std::size_t i = twist; i-- > 0;) {
    x[i] = x[i + 1] / d[i];
    if (std::abs(x[i]) > kRescale) {
      for (std::size_t j = i; j <= twist; ++j) x[j] /= kRescale;
      scale /= kRescale;
    }
  }
  for (std::size_t i = twist + 1; i < n; ++i) {
    x[i] = x[i - 1] / e[i];
    if (std::abs(x[i]) > kRescale) {
      for (std::size_t j = 0; j <= i; ++j) x[j] /= kRescale;
      scale /= kRescale;
    }
  }

  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  return {std::move(x), gamma * scale / std::sqrt(norm2)};
}

double free_laplacian_eigenvalue(std::size_t n, std::size_t index) {
  const double s = std::sin(static_cast<double>(index + 1) * std::numbers::pi /
                            (2.0 * static_cast<double>(n + 1)));
  return 4.0 * s * s;
}

}  // namespace specgap
