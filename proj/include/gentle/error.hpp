#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gentle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes do not fit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A symbolic value was needed as a rational but a variable had no value.
class SpecializationError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a quiver file; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// One of the four gentle axioms fails.
class GentleAxiomError : public Error {
 public:
  GentleAxiomError(int axiom, const std::string& vertex, const std::string& detail)
      : Error("gentle axiom (" + std::to_string(axiom) + ") violated at vertex " + vertex + ": " +
              detail),
        axiom_(axiom),
        vertex_(vertex) {}
  int axiom() const { return axiom_; }
  const std::string& vertex() const { return vertex_; }

 private:
  int axiom_;
  std::string vertex_;
};

/// Structural problem with a quiver: oriented cycle, bad coloring, unknown names.
class QuiverError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation (invalid rank function, non-regular data, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug or a counterexample worth reporting.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace gentle
