#pragma once

#include <stdexcept>
#include <string>

namespace midloc {

// An instance outside the problem domain: D <= 1, |x| > D, or a quit radius
// outside (0, D].
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A strategy was driven with the wrong number representation, e.g. the
// 1/e-stepping strategy over plain rationals.
class RepresentationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a run leaves the segment or otherwise breaks a trace invariant.
// Indicates a bug in a transition map, never a property of the instance.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact computation would exceed a fixed work budget, such as a digit
// expansion whose period is longer than max_expansion_digits().
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace midloc
