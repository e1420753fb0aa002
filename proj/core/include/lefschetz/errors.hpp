#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// d∘d does not vanish on some generator.
class NotLieAlgebra : public Error {
 public:
  NotLieAlgebra(const std::string& what, int generator) : Error(what), generator_(generator) {}
  /// 1-based index of the offending generator.
  int generator() const noexcept { return generator_; }

 private:
  int generator_;
};

class NotSymplectic : public Error {
 public:
  using Error::Error;
};

class NotContained : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

/// Raised when an identity that must hold exactly is violated; always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class IdentityViolated : public Error {
 public:
  using Error::Error;
};

class EquivalenceViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace lefschetz
