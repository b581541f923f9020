#pragma once

#include <stdexcept>

namespace hosoya {

/// Raised when an argument lies outside an operation's mathematical domain
/// (row index < 1, non-square matrix, t < 1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact division that must be exact leaves a remainder.
/// Seeing one means an internal invariant broke, not bad input.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hosoya
