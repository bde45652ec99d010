#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in rings of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exponent arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured cap. Never silently truncated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed (e.g. an LP witness that does not verify).
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gbd
