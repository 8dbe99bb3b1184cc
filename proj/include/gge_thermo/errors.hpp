#pragma once

#include <stdexcept>
#include <string>

namespace gge_thermo {

// Input failed a structural precondition (shape, Hermiticity, trace, ...).
class invalid_operator_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class dimension_mismatch_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class non_unitary_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested expectation values lie outside the joint numerical range of the
// charges, detected either by a spectral pre-check or by multiplier divergence.
class infeasible_targets_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The charges (together with the identity) are linearly dependent, so the
// dual Hessian is singular and the multipliers are not identifiable.
class degenerate_charges_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A multi-copy construction would exceed the configured dimension cap.
class dimension_guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class nonfinite_result_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gge_thermo
