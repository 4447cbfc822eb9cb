#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crclass {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by an exact zero (number or expression).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a vanishing denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Malformed expression text. `offset` is a 0-based byte position.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownVariable, ExponentOverflow };

  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : Error(what + " at offset " + std::to_string(offset)), kind_(kind), offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// A manifold specification broke one of its invariants.
class ValidationError : public Error {
 public:
  enum class Kind { Reality, Dimension, FrameSingular, Pole, Schema };

  ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Cramer system or change-of-frame matrix is identically singular.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// No row subset makes the frame's coefficient system invertible.
class DependentFrameError : public Error {
 public:
  using Error::Error;
};

/// Vector field is not in the span of the given frame.
class NonMemberError : public Error {
 public:
  using Error::Error;
};

/// Slant function requested while the generic Levi rank is not 1.
class RankMismatchError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace crclass
