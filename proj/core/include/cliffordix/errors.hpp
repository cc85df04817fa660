#pragma once

#include <stdexcept>
#include <string>

namespace cliffordix {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments or curve specifications.
struct DomainError : Error {
    using Error::Error;
};

// Checked 64-bit arithmetic overflowed; aborting beats wrapping silently.
struct OverflowError : Error {
    using Error::Error;
};

// Input data violates a sequence axiom or a stated invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Two certified bounds exclude each other. This cannot happen for valid
// inputs unless a rule is mis-encoded, so it is always a bug report.
struct InconsistencyError : Error {
    using Error::Error;
};

} // namespace cliffordix
