#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace favourlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, world, theory or cell-table text. `position` is a
/// zero-based character offset into the offending line or formula.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom '" + atom + "'"), atom_(atom) {}

  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

/// A configured size bound (atoms, rules, world size) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an event of probability zero.
class ZeroMassCondition : public Error {
 public:
  explicit ZeroMassCondition(const std::string& condition)
      : Error("conditioning event has zero mass: " + condition) {}
};

/// Input violates a documented precondition or data invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace favourlab
