#pragma once

#include <stdexcept>
#include <string>

namespace kstruve {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of the function (invariant violation, bad sign, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma function pole: a non-positive integer argument.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result not representable in the floating type.
class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Fox-Wright spec whose convergence index is <= -1.
class ConvergenceConditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Integrand produced NaN or infinity at an interior abscissa.
class NonFiniteSampleError : public DomainError {
 public:
  NonFiniteSampleError(const std::string& what, double abscissa)
      : DomainError(what), abscissa_(abscissa) {}
  [[nodiscard]] double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Iteration limit reached before the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace kstruve
