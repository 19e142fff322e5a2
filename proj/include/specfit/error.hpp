#pragma once

#include <stdexcept>
#include <string>

namespace specfit {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A coordinate lies outside the interval/region it must belong to,
/// or an input value is non-finite.
struct DomainError : Error {
  using Error::Error;
};

/// Requested derivative order exceeds the supported maximum.
struct UnsupportedOrderError : Error {
  using Error::Error;
};

/// Coefficient data is malformed (wrong length, non-finite entries).
struct InvalidFieldError : Error {
  using Error::Error;
};

/// Incompatible tensor/matrix shapes.
struct ShapeError : Error {
  using Error::Error;
};

/// Invalid configuration (bad parameter value, unknown key, bad file).
struct ConfigError : Error {
  using Error::Error;
};

/// A linear-algebra or optimization step failed numerically.
struct NumericalError : Error {
  using Error::Error;
};

/// A residual, loss, or gradient evaluated to a non-finite value.
struct DivergedError : Error {
  using Error::Error;
};

/// A sampling region is degenerate (vanishing acceptance, no edge cells).
struct DegenerateDomainError : DomainError {
  using DomainError::DomainError;
};

/// A reference solution could not be produced to its required accuracy.
struct OracleError : Error {
  using Error::Error;
};

/// Error-metric computation received unusable inputs.
struct MetricError : Error {
  using Error::Error;
};

}  // namespace specfit
