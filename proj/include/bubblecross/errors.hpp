#pragma once

#include <stdexcept>
#include <string>

namespace bubblecross {

// Bad arguments from the caller: malformed permutations, unsupported (n, a)
// pairs, parity mismatches. The CLI maps these to exit code 2.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dimension outside the configured guard (graph materialization,
// enumeration size, generation depth).
class dimension_out_of_range : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

// A checked property failed. Raised when an internal cross-check disagrees,
// which means a bookkeeping or transcription bug, never bad user input.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bubblecross
