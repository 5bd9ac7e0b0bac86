#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (support mismatch, bad leg count...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text input does not follow the grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Requested degree is above the configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace jacobi
