#pragma once

#include <stdexcept>
#include <string>

namespace ordlen {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `position` is a byte offset into the
/// offending string when known.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what
                               : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A combinatorial guard (variable count, vector-space dimension, search
/// bound) was exceeded.
class GuardError : public Error {
public:
  using Error::Error;
};

/// Arguments violate a documented precondition (mismatched ambient rings,
/// J not contained in I, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace ordlen
