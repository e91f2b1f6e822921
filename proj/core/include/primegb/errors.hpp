#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace primegb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Fixed64 coefficient operation left the signed 64-bit range.
class CoefficientOverflow : public Error {
 public:
  explicit CoefficientOverflow(std::string operation)
      : Error("coefficient overflow in " + operation), operation_(std::move(operation)) {}
  const std::string& operation() const noexcept { return operation_; }

 private:
  std::string operation_;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A prime image does not fit in 64 bits.
class ImageOverflow : public Error {
 public:
  explicit ImageOverflow(std::string operation)
      : Error("prime image overflow in " + operation), operation_(std::move(operation)) {}
  const std::string& operation() const noexcept { return operation_; }

 private:
  std::string operation_;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("power product is not divisible") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("zero polynomial has no leading monomial") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(char name, std::size_t line, std::size_t column)
      : ParseError(std::string("unknown variable '") + name + "'", line, column), name_(name) {}
  char name() const noexcept { return name_; }

 private:
  char name_;
};

class UnknownSystem : public Error {
 public:
  explicit UnknownSystem(const std::string& name) : Error("unknown system '" + name + "'") {}
};

class InvalidPermutation : public Error {
 public:
  explicit InvalidPermutation(const std::string& what) : Error("invalid permutation: " + what) {}
};

/// The computation passed its deadline.
class Timeout : public Error {
 public:
  Timeout() : Error("computation timed out") {}
};

}  // namespace primegb
