#pragma once

#include <stdexcept>
#include <string>

namespace cuvms {

// Pitch too close to +-pi/2; the Euler-rate map is not invertible there.
struct GimbalLockError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// J W^-1 J^T numerically singular; no weighted inverse exists.
struct SingularTaskError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bending angle outside its admissible open interval.
struct JointLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vehicle directly above/below the goal; the bearing angle is undefined.
struct DegenerateAlignmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cuvms
