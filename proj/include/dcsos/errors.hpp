#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcsos {

// Operands disagree on the number of variables.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad algorithm parameter, e.g. s <= 0 in the parity decomposition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid parity separation request (supplied odd part does not fit).
class SeparationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Violated operation precondition, e.g. non-squarefree input where a
// squarefree monomial is required.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Basis cannot represent some monomial of the target polynomial.
class BasisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is outside the algorithm's domain (e.g. a constant-only polynomial
// fed to the direct-basis route, which needs at least one nonconstant term).
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative numeric routine failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Expression parsing failure; offset() is the byte position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace dcsos
