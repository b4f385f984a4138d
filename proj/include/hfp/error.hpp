#pragma once

#include <stdexcept>
#include <string>

namespace hfp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (singularity outside the interval, duplicate interpolation nodes, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An integer or structural parameter is out of range (n <= p, m <= 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The requested weight has no closed-form moments and no provider.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Evaluation produced a division by zero or a non-finite value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration; the message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hfp
