#pragma once

#include <stdexcept>
#include <string>

namespace quadholes {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coordinate lies outside the exact-arithmetic envelope |v| <= 2^30.
class CoordinateRangeError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with inputs that violate its precondition
/// (degenerate point sets, wrong sizes, malformed runs).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A case analysis reached a state that its own premises rule out.
/// Always an implementation bug, never a property of a legal input.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

/// The exact oracle was asked for more work than its configured cap allows.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Malformed point-set or solution file. Line numbers are 1-based; 0 means
/// the error is not tied to a particular line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace quadholes
