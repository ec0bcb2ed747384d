#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bowtie {

/// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input text that could not be parsed; carries a 1-based line and column
/// (column is a byte offset for graph6 input).
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : InputError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string s = "line " + std::to_string(line);
    if (column != 0) s += ", position " + std::to_string(column);
    return s + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An exact search ran out of its node or memory budget before it could
/// certify an answer. The CLI maps this to exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A (k, kind, n) combination for which no closed form is known.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bowtie
