#pragma once

#include <stdexcept>
#include <string>

namespace qcoh {

// Base of every error raised by the library. The CLI maps CapacityError to
// exit code 3 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested dimension exceeds a configured guard (qubit count, eigensolver
// size, enumeration size).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Operation needs a register split the state does not have, or the selected
// register does not fit the layout.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented precondition (normalization, hermiticity, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Base shares a factor with the modulus. The common factor is kept so callers
// can report it.
class InvalidBaseError : public Error {
 public:
  InvalidBaseError(const std::string& what, unsigned long long common_factor)
      : Error(what), common_factor_(common_factor) {}

  unsigned long long common_factor() const noexcept { return common_factor_; }

 private:
  unsigned long long common_factor_;
};

// Grover quantities that are undefined without at least one marked item.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

// Function table violates the constant-or-balanced promise.
class InvalidFunctionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcoh
