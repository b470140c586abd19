#pragma once

#include <stdexcept>
#include <string>

namespace frobsys {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Argument outside the mathematical domain of an operation (e < 1, zero multiplier, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Objects from different rings were combined.
class StructuralError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "structural"; }
};

/// A resource cap fired. The message names the cap.
class ResourceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "resource"; }
};

/// A documented precondition of an operation does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// Input that is well-formed but outside what is implemented (e.g. non-rational points).
class UnsupportedError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported"; }
};

/// An internal invariant or a proven statement failed; always indicates a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invariant"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column) : ParseError(what, 0, column) {}
  /// line 0 means the input was a single line.
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + where(line, column)), detail_(what), line_(line), column_(column) {}
  const char* kind() const noexcept override { return "parse"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// Message without the location suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string where(std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return "";
    if (line == 0) return " (column " + std::to_string(column) + ")";
    return " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace frobsys
