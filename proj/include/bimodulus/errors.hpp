#pragma once

#include <stdexcept>
#include <string>

namespace bimodulus {

// Bad input or a violated precondition. The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands from different fields, e.g. F_7 + F_11 or Q + F_p.
struct FieldMismatch : DomainError {
  using DomainError::DomainError;
};

struct DivisionByZero : DomainError {
  DivisionByZero() : DomainError("division by zero") {}
};

// A cross-check between two independent computations disagreed. Exit code 3.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace bimodulus
