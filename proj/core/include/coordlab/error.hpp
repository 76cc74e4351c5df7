#pragma once

#include <stdexcept>
#include <string>

namespace coordlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rectangle with a >= b or c >= d.
class DegenerateDomain : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside its admissible range (s, p, q, weights, grid sizes).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An abscissa or evaluation point lies outside the interval it is used with.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// A finite-difference stencil leaves the function's domain of validity.
class DomainExceeded : public Error {
 public:
  using Error::Error;
};

/// Adaptive subdivision hit its depth limit with an unmet error budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Ostrowski anchors violate a <= alpha1 < beta1 <= b or c <= alpha2 < beta2 <= d.
class AnchorOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace coordlab
