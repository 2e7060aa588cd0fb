#pragma once

#include <stdexcept>
#include <string>

namespace mlf {

// Argument outside the mathematical domain of an operation (e.g. a gamma pole,
// |eps| >= 1 for the psi kernels, phi outside (pi/4, pi/2)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid user-facing parameter such as alpha <= 0 or an even m + n.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rational function evaluated at one of its poles.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a homogeneous system does not have a one-dimensional null space
// at working precision, or a pivot collapses.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative procedure failed (root finder stalled, clustered roots).
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mlf
