#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arborium {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arbor text. `position()` is the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a structural invariant (e.g. labels not a partition of [n]).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Exact-arithmetic contract violation, e.g. a division that leaves a remainder.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

}  // namespace arborium
