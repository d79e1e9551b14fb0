#pragma once

#include <stdexcept>
#include <string>

namespace locdiag {

// Raised by the formula and system-file parsers. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A caller violated a documented precondition.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// No diagnosis exists: the system description contradicts the observation
// outright, so no retraction of assumables can restore consistency.
class NotDiagnosableError : public std::runtime_error {
 public:
  explicit NotDiagnosableError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace locdiag
