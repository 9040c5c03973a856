#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lislab {

// All coordinates and weights are exact 64-bit integers. Magnitudes in the
// embeddings grow like n^2 * M, so int64 is the capacity contract; every
// formula goes through the checked helpers below.
using Coord = std::int64_t;
using Weight = std::int64_t;

/// Malformed or out-of-contract input (bad dimensions, entries out of range,
/// unknown labels, parse errors).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer overflow in a coordinate or weight formula.
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw ArithmeticOverflow("int64 overflow in addition");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw ArithmeticOverflow("int64 overflow in subtraction");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ArithmeticOverflow("int64 overflow in multiplication");
    }
    return r;
}

template <typename... Ts>
std::int64_t checked_mul(std::int64_t a, std::int64_t b, Ts... rest) {
    return checked_mul(checked_mul(a, b), rest...);
}

}  // namespace lislab
