#pragma once

#include <stdexcept>

namespace specpart {

// Error taxonomy shared across the library. The CLI maps these onto its
// exit codes (usage/parse = 2, precondition = 3, guard = 4, timeout = 5).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates an operation's documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// Instance exceeds the exact-solver size guard and no override was given.
struct SizeGuardError : Error {
    using Error::Error;
};

// Wall-clock budget exhausted inside a solver.
struct TimeoutError : Error {
    using Error::Error;
};

// Node budget exhausted inside a search.
struct SearchLimitError : Error {
    using Error::Error;
};

// Malformed external input (edge-list files, JSON payloads).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace specpart
