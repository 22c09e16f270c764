#pragma once

#include <stdexcept>
#include <string>

namespace augberg {

/// Malformed or out-of-range input (unknown element, subset outside E, bad document).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (e.g. gallery test on a non-pure complex).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal invariant failed. Reaching this means a bug or a false mathematical claim.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested computation is not supported for this input (e.g. torsion in homology).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size caps shared by the exponential algorithms. Defaults match the CLI.
struct Limits {
  int ground = 10;
  int automorphism = 8;
  long long facets = 200000;
};

}  // namespace augberg
