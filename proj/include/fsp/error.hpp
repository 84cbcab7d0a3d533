#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed N-Triples input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A graph breaks the completeness or functionality assumption that
/// star-pattern grouping relies on.
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A quantity is undefined for the given input (1/0, savings over 0 edges).
class UndefinedValueError : public Error {
 public:
  using Error::Error;
};

class NoCandidateError : public Error {
 public:
  using Error::Error;
};

/// A factorized graph is inconsistent with the instanceOf axioms.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace fsp
