#pragma once

#include <stdexcept>
#include <string>

namespace frechet {

// Bad arguments: dimension mismatch, out-of-range parameters, invalid flags.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed curve file; message carries the source name and line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid curve (too few vertices, mixed dimensions, non-finite).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds the exhaustive-enumeration limits of the brute engine.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reachability table would exceed the configured memory budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace frechet
