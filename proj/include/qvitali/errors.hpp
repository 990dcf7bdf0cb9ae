#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qvitali {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the q-domain (x <= lambda) or outside a function's
// positive range.
class DomainError : public Error {
public:
  using Error::Error;
};

// 1 + (1 - q) y == 0: the q-difference and the q-negation are undefined.
class SingularOperand : public Error {
public:
  using Error::Error;
};

class PreconditionViolation : public Error {
public:
  using Error::Error;
};

// Exact evaluation met an operation that leaves the rationals.
class ModeError : public Error {
public:
  using Error::Error;
};

// Lexer and parser diagnostics carry a 1-based column.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t column)
      : Error(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

class LexError : public SyntaxError {
public:
  using SyntaxError::SyntaxError;
};

class ParseError : public SyntaxError {
public:
  using SyntaxError::SyntaxError;
};

} // namespace qvitali
