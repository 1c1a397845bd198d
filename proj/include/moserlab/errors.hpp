#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moserlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (t < 10, alpha <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quotient by Z(t) was requested too close to a zero of Z.
class PoleError : public Error {
 public:
  using Error::Error;
};

class InvalidBracket : public Error {
 public:
  using Error::Error;
};

/// Malformed zero-table text; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MonotonicityError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A zero table does not cover the range an operation needs.
class IncompleteTable : public Error {
 public:
  using Error::Error;
};

/// Kernel evaluated within 1e-8 of a zero ordinate.
class CoincidenceError : public Error {
 public:
  using Error::Error;
};

/// A scan could not isolate what the counting argument says is there.
class NumericFault : public Error {
 public:
  using Error::Error;
};

/// p(t0) < 0 so no non-negative pressure interval exists around t0.
class NoIntervalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace moserlab
