#pragma once

#include <stdexcept>
#include <string>

namespace gpscale {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Cholesky factorization of a kernel matrix failed.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity that must be non-negative came out clearly negative.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Standard score with a zero denominator but a non-zero numerator.
class DegenerateScore : public Error {
 public:
  using Error::Error;
};

/// Two kernels that must agree (expansion vs. fit, embedding vs. fit) do not.
class KernelMismatch : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class NonPositiveValues : public Error {
 public:
  using Error::Error;
};

/// Malformed config file, unknown key, or bad override.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpscale
