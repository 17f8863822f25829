#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lambdalat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index outside 0..n-1, or a table entry that is not an element.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The supplied relation is not antisymmetric once closed.
class CycleError : public Error {
 public:
  using Error::Error;
};

class NotDirectedError : public Error {
 public:
  using Error::Error;
};

class UnboundedError : public Error {
 public:
  using Error::Error;
};

class NoTopError : public Error {
 public:
  using Error::Error;
};

/// A chosen join/meet value lies outside U(x,y) resp. L(x,y), or names a comparable pair.
class BadChoiceError : public Error {
 public:
  using Error::Error;
};

/// An incomparable pair has no chosen value and no forced sup/inf.
class IncompleteChoiceError : public Error {
 public:
  using Error::Error;
};

/// Operation tables that do not satisfy the λ-lattice identities.
class AxiomError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t requested)
      : Error(what), requested_(requested) {}
  std::uint64_t requested() const { return requested_; }

 private:
  std::uint64_t requested_;
};

class UnknownTheoremError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lambdalat
