#pragma once

#include <stdexcept>
#include <string>

namespace qes {

// An operator substitution met a coefficient polynomial whose parity is
// incompatible with the quadratic change of variable.
class OddCoefficientError : public std::domain_error {
 public:
  explicit OddCoefficientError(const std::string& what)
      : std::domain_error(what) {}
};

// Matrix shapes do not agree for the requested operation.
class DimensionMismatchError : public std::invalid_argument {
 public:
  explicit DimensionMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A finite-dimensional reduction was requested in strict mode while the
// closure constraint is violated (the subspace is not actually invariant).
class ConstraintViolatedError : public std::domain_error {
 public:
  explicit ConstraintViolatedError(const std::string& what)
      : std::domain_error(what) {}
};

// A recursion denominator vanished; carries the index of the offending step.
class SingularDenominatorError : public std::domain_error {
 public:
  SingularDenominatorError(const std::string& what, int index)
      : std::domain_error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// Grid construction parameters are unusable (too few nodes, non-positive step).
class InvalidGridError : public std::invalid_argument {
 public:
  explicit InvalidGridError(const std::string& what)
      : std::invalid_argument(what) {}
};

// An iterative numeric routine failed to reach its documented tolerance.
class ConvergenceFailureError : public std::runtime_error {
 public:
  explicit ConvergenceFailureError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qes
