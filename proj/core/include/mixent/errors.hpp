#pragma once

#include <stdexcept>
#include <string>

namespace mixent {

/// Raised when inputs violate an operation's precondition (impossible
/// partition, non-normalized distribution, mixed temperatures, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the enumeration oracle when a request exceeds its hard size
/// guard. The message states the bound.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when a scenario document cannot be parsed. Line and column are
/// 1-based; zero means the position is unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

}  // namespace mixent
