#pragma once

#include <stdexcept>
#include <string>

namespace ratgamma {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Index outside a table or a supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Series argument outside (or on the boundary of) the convergence region.
class RegionError : public Error {
 public:
  using Error::Error;
};

// Request would exceed a configured memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Iterative numerical procedure failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ratgamma
