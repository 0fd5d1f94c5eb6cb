#pragma once

#include <stdexcept>
#include <string>

namespace nct {

// Truncated computation did not settle across the radius schedule.
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A convention or structural invariant broke; never expected on valid input.
struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

// Input is well-formed but violates a precondition (e.g. not a cycle).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nct
