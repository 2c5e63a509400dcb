#pragma once

#include <stdexcept>
#include <string>

namespace lobdk {

struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numeric range exceeded (series regime, step caps, ...).
struct NumericRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gamma pole at a nonpositive integer.
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sigma^2 != epsilon^2 - M^2 where the constraint applies, or a branch/q mismatch.
struct InconsistentQuantumNumbersError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ODE oracle could not reach the requested local tolerance.
struct OracleFailureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a = b = 0: the radial reduction divides by a +- ib.
struct DegenerateTransverseMomentumError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// J_{-mu} with mu a nonnegative integer: linearly dependent on J_mu.
struct UnavailableBranchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lobdk
