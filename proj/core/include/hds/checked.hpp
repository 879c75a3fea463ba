#pragma once

#include <cstdint>

#include "hds/error.hpp"

namespace hds {

using Int = std::int64_t;

// 64-bit arithmetic that throws Error{Overflow} instead of wrapping.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "integer overflow in addition");
    }
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
    }
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
    }
    return r;
}

// C(n, 3) for n >= 0; throws on overflow.
Int choose3(Int n);
// C(n, 2) for n >= 0; throws on overflow.
Int choose2(Int n);

} // namespace hds
