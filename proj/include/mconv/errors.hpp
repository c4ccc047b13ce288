#pragma once

#include <stdexcept>
#include <string>

namespace mconv {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad rational literal, bad JSON shape, violated precondition.
struct ValidationError : Error {
    using Error::Error;
};

// Operands live in different ambient dimensions.
struct DimensionMismatch : ValidationError {
    explicit DimensionMismatch(std::size_t a, std::size_t b)
        : ValidationError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// A construction would exceed the configured derivative-order cap.
struct OrderCapExceeded : ValidationError {
    explicit OrderCapExceeded(unsigned got, unsigned cap)
        : ValidationError("derivative order " + std::to_string(got) + " exceeds cap " + std::to_string(cap)) {}
};

// Floating-point stage failed: root finding, pole on the evaluation point, grid too small.
struct NumericError : Error {
    using Error::Error;
};

} // namespace mconv
