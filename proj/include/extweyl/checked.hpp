#pragma once

#include <cstdint>
#include <vector>

#include "extweyl/errors.hpp"

namespace extweyl {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

// All coordinate arithmetic goes through these; silent wraparound is never
// acceptable, callers see OverflowError instead.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

} // namespace extweyl
