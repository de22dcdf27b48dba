#pragma once

#include <stdexcept>
#include <string>

namespace mt {

/// Absolute tolerance used for height and distance comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

/// A precondition on the mathematical input was violated (invalid tree,
/// non-valid matrix, label-count mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidTree : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidMatrix : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed input text (JSON or matrix files). Messages carry line numbers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exhaustive search of unlabeled_interleaving ran out of its state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mt
