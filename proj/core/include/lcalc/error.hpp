#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called on inputs violating its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested group, representation or field is outside what is modeled.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold by construction failed to verify.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcalc
