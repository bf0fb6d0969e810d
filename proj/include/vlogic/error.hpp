#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vlogic {

enum class ErrorKind {
  domain,             // weight outside [0,1], vector outside Π
  arity,              // wrong number of arguments for a gate
  invalid_argument,   // precondition on a scalar argument violated
  lexical,
  syntax,
  unbalanced,         // unbalanced parentheses
  unknown_identity,
  missing_variable,
  non_binary,         // binary evaluation given a fractional weight
  cap_exceeded,       // too many variables for exhaustive enumeration
  variable_clash,     // integration variable already occurs in the formula
  template_mismatch,  // substitution template over the wrong variables
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t line,
             std::size_t column)
      : Error(kind, message + " at " + std::to_string(line) + ":" +
                        std::to_string(column)),
        detail_(message),
        line_(line),
        column_(column) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vlogic
