#pragma once

#include <stdexcept>
#include <string>

namespace leray {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two arguments of a singular kernel are closer than the coincidence floor.
class CoincidentPointsError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point lies on (or within a stencil of) a source support.
class OnSupportError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a chart, slab or parameter range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed physical or numerical parameter (negative radius, pitch ∉ (0,1), ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// Foliation gradients vanish or fail the orthogonality test.
class DegenerateFoliationError : public Error {
 public:
  using Error::Error;
};

/// An iterative method or series exhausted its budget.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Point-source trajectory reached |v| >= c.
class SuperluminalError : public Error {
 public:
  using Error::Error;
};

}  // namespace leray
