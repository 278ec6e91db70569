#pragma once

#include <stdexcept>
#include <string>

namespace cartprod {

/// Operand shapes do not conform (non-square input, mismatched orders, ...).
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact integer arithmetic would overflow a 64-bit component.
class arithmetic_overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// The result would exceed the configured entry-count cap.
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A graph operation requiring connectivity found an unreachable vertex pair.
class connectivity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The eigensolver was handed a matrix that is not symmetric.
class symmetry_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The eigensolver did not reach its residual target within the sweep cap.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file or string does not parse as matrix JSON or edge-list text.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cartprod
