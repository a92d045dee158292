#pragma once

#include <stdexcept>
#include <string>

namespace lpscalar {

/// Bad run or grid configuration (sizes, unknown keys, out-of-range values).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent data (broken conjugate symmetry, bad snapshot
/// bytes, non-finite samples).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Out-of-range numeric parameter of an operation (p < 1, alpha outside
/// [0,1], too few series points, ...).
class parameter_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mean-zero gauge violation: an operation that is only defined on mean-zero
/// scalars received data with a nonzero (0,0) coefficient.
class gauge_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The evolved state became non-finite; the local-in-time solution is lost
/// and the run must halt gracefully.
class blowup_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpscalar
