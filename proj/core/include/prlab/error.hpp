#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prlab {

/// Base for every precondition or input failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomials, terms, matrices, set specs).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An enumeration or search would exceed its documented bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace prlab
