// Error types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transcend {

// Base class so callers can catch everything the library throws in one place.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; `position` is the byte offset where parsing failed.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Identifier outside the function/constant vocabulary.
class UnknownFunction : public Error {
 public:
  UnknownFunction(const std::string& name, std::size_t position)
      : Error("unknown function or constant '" + name + "' at position " +
              std::to_string(position)),
        name_(name),
        position_(position) {}
  const std::string& name() const { return name_; }
  std::size_t position() const { return position_; }

 private:
  std::string name_;
  std::size_t position_;
};

// Exact arithmetic attempted a division by zero (constant fold, rational ops).
class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& msg = "division by zero")
      : Error(msg) {}
};

// Numeric evaluation hit a pole or left a function's real domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Expression references tau but no tau value was supplied for evaluation.
class MissingTau : public Error {
 public:
  MissingTau() : Error("expression contains tau but no tau value was given") {}
};

// An operation that requires a variable-free expression received one with x.
class VariablePresent : public Error {
 public:
  explicit VariablePresent(const std::string& msg =
                               "expression contains the variable x")
      : Error(msg) {}
};

// Exact lookup of a function value at a pole of that function.
class UndefinedAtPoint : public Error {
 public:
  explicit UndefinedAtPoint(const std::string& msg) : Error(msg) {}
};

// Root solving: supplied interval does not bracket a sign change.
class NoSignChange : public Error {
 public:
  explicit NoSignChange(const std::string& msg) : Error(msg) {}
};

// Root solving: iteration budget exhausted before reaching tolerance.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// Contour integration: a zero sits on (or numerically on) the region boundary
// even after jitter retries.
class BoundaryZero : public Error {
 public:
  explicit BoundaryZero(const std::string& msg) : Error(msg) {}
};

}  // namespace transcend
