#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

// Malformed input: bad JSON, invalid group table, non-prime modulus, degree
// out of range, ... Maps to CLI exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A machine check failed: an axiom does not hold, a solve that must succeed
// is infeasible, a structure that must be invertible is singular. Maps to
// CLI exit code 1.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was requested beyond the truncation budget it was built with
// (e.g. multiplying degrees i and j with i + j > max_degree).
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qhopf
