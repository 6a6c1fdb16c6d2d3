#pragma once

#include <stdexcept>
#include <string>

namespace rpoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cartan matrix does not describe a root system of the declared type.
class InvalidCartanError : public Error {
 public:
  using Error::Error;
};

/// A computation was refused because it would exceed a configured size guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant that the mathematics guarantees was found broken.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace rpoly
