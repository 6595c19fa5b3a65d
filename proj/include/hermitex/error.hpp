#pragma once

#include <stdexcept>
#include <string>

namespace hermitex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A value cannot be coerced into the ring an operation needs.
class NonCoercible : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exact value does not fit the float range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A requested polynomial order is above the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A numerical routine did not converge or lost accuracy.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold did not (indicates an arithmetic bug).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `token()` is 1-based, 0 when not token-specific.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t token)
      : Error(what), token_(token) {}
  std::size_t token() const noexcept { return token_; }

 private:
  std::size_t token_;
};

}  // namespace hermitex
