#pragma once

#include <stdexcept>
#include <string>

namespace surfel {

// Bad user-facing input: out-of-range moduli, malformed scenario, etc.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A denominator or linear system collapsed for the given parameters.
struct DegenerateSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace surfel
