#pragma once

#include <stdexcept>
#include <string>

namespace nblab {

/// Base class for all numerical failures raised by this library.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the critical strip 0 < Re(s) < 1 (or other stated domain).
class DomainError : public NumericalError {
 public:
  explicit DomainError(const std::string& what) : NumericalError(what) {}
};

/// Evaluation at (or too close to) a pole.
class PoleError : public NumericalError {
 public:
  explicit PoleError(const std::string& what) : NumericalError(what) {}
};

/// Adaptive quadrature ran out of subdivisions. Carries the partial result
/// and the error estimate reached, so callers can decide what to do.
class QuadConvergenceError : public NumericalError {
 public:
  QuadConvergenceError(const std::string& what, double partial, double err_estimate)
      : NumericalError(what), partial_value(partial), error_estimate(err_estimate) {}
  double partial_value;
  double error_estimate;
};

/// Cholesky factorization failed beyond the shift tolerance.
class NotPositiveDefiniteError : public NumericalError {
 public:
  NotPositiveDefiniteError(const std::string& what, int minor_index)
      : NumericalError(what), leading_minor(minor_index) {}
  int leading_minor;  // 1-based index of the first non-positive leading minor
};

/// A structural identity the input was required to satisfy does not hold.
class StructureViolationError : public NumericalError {
 public:
  explicit StructureViolationError(const std::string& what) : NumericalError(what) {}
};

/// A resource guard (e.g. the Monte-Carlo pair-count bound) was exceeded.
class GuardViolationError : public NumericalError {
 public:
  explicit GuardViolationError(const std::string& what) : NumericalError(what) {}
};

/// Bad run configuration (unknown keys, invalid ranges).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nblab
