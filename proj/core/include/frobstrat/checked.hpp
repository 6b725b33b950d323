#pragma once

#include <cstdint>
#include <string>

#include "frobstrat/errors.hpp"

namespace frobstrat {

// All plain integer arithmetic in the library routes through these helpers:
// an overflow throws instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw Overflow("integer addition overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw Overflow("integer subtraction overflow: " + std::to_string(a) + " - " + std::to_string(b));
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Overflow("integer multiplication overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return out;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

}  // namespace frobstrat
