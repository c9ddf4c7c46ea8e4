#pragma once

#include <stdexcept>
#include <string>

namespace kinetics {

/// Base class for all errors raised by this library.
class KineticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Model text could not be parsed. Carries the 1-based line and column of
/// the offending token.
class ParseError : public KineticsError {
 public:
  ParseError(const std::string& message, int line, int column)
      : KineticsError("line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A structurally valid input violates a semantic constraint (duplicate
/// names, unknown parameters, caps below the initial state, ...).
class ValidationError : public KineticsError {
 public:
  using KineticsError::KineticsError;
};

/// A simulation failed at runtime: integrator blow-up, step budget
/// exhausted, or an internal consistency violation.
class SimulationError : public KineticsError {
 public:
  using KineticsError::KineticsError;
};

}  // namespace kinetics
