#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghpq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, factorial of a negative number and similar.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// p = q = 0, negative indices, or any other malformed family parameters.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Coefficient or operation beyond a series truncation order.
class OutOfTruncation : public Error {
 public:
  using Error::Error;
};

/// A representation whose preconditions exclude the given parameters.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ghpq
