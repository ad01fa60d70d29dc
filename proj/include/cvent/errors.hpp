#pragma once

#include <stdexcept>
#include <string>

namespace cvent {

/// Malformed or out-of-contract input (wrong size, constraint violation, bad index).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A formula left its numeric domain: singular limits, non-positive-definite
/// input, negative radicands, spectra below the vacuum bound.
class NumericDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature did not settle between successive refinements.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fock truncation lost more probability than allowed.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvent
