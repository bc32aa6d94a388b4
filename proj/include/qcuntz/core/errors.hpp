#pragma once

#include <stdexcept>
#include <string>

namespace qcuntz {

// Incompatible algebra configurations, wrong deformation mode, bad indices.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numeric preconditions violated (non-unimodular value, |q| >= 1, zero input).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Expression syntax errors; `column` is 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int column)
      : std::runtime_error(msg + " at column " + std::to_string(column)),
        column(column) {}
  int column;
};

}  // namespace qcuntz
