#pragma once

#include <stdexcept>
#include <string>

namespace gk {

// Bad input to an operation (precondition violated by the caller).
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A well-formed group or table lookup outside the supported range.
struct UnsupportedSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gk
