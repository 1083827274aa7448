#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sublist {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two trees passed to a same-shape operation have different skeletons.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// un_tip applied to a Bin node.
class NotATip : public Error {
 public:
  using Error::Error;
};

/// A level index outside the legal range for the requested operation.
class InvalidLevel : public Error {
 public:
  using Error::Error;
};

/// A tree does not have the shape an operation was promised.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// Checked arithmetic left the representable range.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// Input is larger than an operation's documented bound.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed codec text. `position()` is the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sublist
