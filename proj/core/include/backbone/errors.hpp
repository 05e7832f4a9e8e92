#pragma once

#include <stdexcept>
#include <string>

namespace backbone {

// Malformed or out-of-contract input. Maps to exit code 2 in the CLI.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap (oracle, enumeration, kernel) was exceeded. Exit code 3.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A cross-check between two independent computations disagreed. This never
// happens on valid input; it means one of the two routes is wrong. Exit code 4.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A fixed-point iteration did not settle within its iteration budget.
class NonConvergence : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

}  // namespace backbone
