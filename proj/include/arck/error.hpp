#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arck {

// Root of every error the kernel raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A caller broke an operation's precondition (wrong ring, bad exponent,
// non-homogeneous input where a grading is required, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public ContractError {
 public:
  DivisionByZero() : ContractError("division by zero") {}
};

// A configured resource cap (degree cap, iteration cap) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arck
