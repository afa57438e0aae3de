#pragma once

#include <stdexcept>
#include <string>

namespace minwin {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Caller violated an operation's precondition (bad dimensions, mismatched orders).
struct usage_error : error {
    using error::error;
};

/// A game specification fails the structural rules of a game with minimum.
struct validation_error : error {
    using error::error;
};

/// A brute-force routine was asked to run above its configured size bound.
struct capacity_error : error {
    using error::error;
};

/// Two exact computations that must agree did not, or a count came out non-integral.
struct consistency_error : error {
    using error::error;
};

/// A dimension certificate component failed to check.
struct verification_error : error {
    using error::error;
};

} // namespace minwin
