#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sclab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class PrimeDoesNotDivide : public Error {
 public:
  PrimeDoesNotDivide(int p, std::size_t order)
      : Error("prime " + std::to_string(p) + " does not divide group order " +
              std::to_string(order)) {}
};

class NotAPGroup : public Error {
 public:
  using Error::Error;
};

class NotMutuallyNormalizing : public Error {
 public:
  using Error::Error;
};

class NotInLattice : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownBuiltin : public Error {
 public:
  explicit UnknownBuiltin(const std::string& name) : Error("unknown builtin group '" + name + "'") {}
};

/// A chain complex or chain enumeration grew past the configured simplex bound.
class SizeCap : public Error {
 public:
  using Error::Error;
};

class MapNotWellDefined : public Error {
 public:
  using Error::Error;
};

class ComparisonFails : public Error {
 public:
  using Error::Error;
};

class NotASubposet : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

}  // namespace sclab
