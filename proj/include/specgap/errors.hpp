#pragma once

#include <stdexcept>
#include <string>

namespace specgap {

// Base for every numerical failure reported by the library. Invalid
// arguments (bad parameters, malformed grids) use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The grid does not resolve the narrowest feature of the potential.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// An iterative method exhausted its budget without meeting tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// The estimated error is too large relative to the computed quantity.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A root-finding bracket does not contain a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

// An exponent fit window selects too few rows.
class WindowError : public Error {
 public:
  using Error::Error;
};

// A bound check was requested for a potential outside its hypothesis class.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace specgap
