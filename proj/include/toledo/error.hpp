#pragma once

#include <stdexcept>
#include <string>

namespace toledo {

/// Base class for every failure raised by the library. Module-specific
/// errors derive from it so callers can catch one type at the boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(std::string operand)
      : Error("division by zero (divisor " + operand + ")"), operand_(std::move(operand)) {}
  const std::string& operand() const noexcept { return operand_; }

 private:
  std::string operand_;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& op, std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2)
      : Error(op + ": dimension mismatch " + std::to_string(r1) + "x" + std::to_string(c1) + " vs " +
              std::to_string(r2) + "x" + std::to_string(c2)) {}
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace toledo
