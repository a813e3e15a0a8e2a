#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "specgap/errors.hpp"

namespace specgap {

// Bracketed bisection for a continuous function with f(lo) and f(hi) of
// opposite sign. Stops once the bracket is narrower than rel_tol relative to
// its magnitude, or when the midpoint no longer separates the endpoints.
// An endpoint that is an exact root is returned as is.
template <class F>
double bisect(F&& f, double lo, double hi, double rel_tol, int max_iter = 400) {
  double f_lo = f(lo);
  if (f_lo == 0.0) return lo;
  const double f_hi = f(hi);
  if (f_hi == 0.0) return hi;
  if (std::isnan(f_lo) || std::isnan(f_hi) || (f_lo < 0.0) == (f_hi < 0.0)) {
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi))) return mid;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("bisection did not converge in " + std::to_string(max_iter) + " iterations");
}

}  // namespace specgap
