#pragma once

#include <stdexcept>
#include <string>

namespace dawn {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (banner, header, dims line).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A token that should have been an integer was not.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Node id or index outside the declared range.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Valid input in a variant this library does not handle (dense arrays etc).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent call configuration, e.g. BOVM requested without a CSC.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Output would exceed the configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace dawn
