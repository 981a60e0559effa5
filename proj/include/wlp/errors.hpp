#pragma once

#include <stdexcept>

namespace wlp {

// Malformed input or an out-of-contract argument. The CLI maps this to
// exit code 1.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A closed-form predicate disagreed with the direct rank engine, or an
// internal cross-check between two independent computations of the same
// quantity failed. Always a bug, never swallowed. CLI exit code 2.
struct oracle_mismatch : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wlp
