#pragma once

#include <cstdint>
#include <stdexcept>

namespace atgrid {

// Overflow-checked arithmetic on the backing integer type of all exact
// engines. Overflow throws std::overflow_error; it never wraps.

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("int64 add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("int64 sub overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("int64 mul overflow");
    return r;
}

inline std::int64_t checked_neg(std::int64_t x) {
    return checked_sub(0, x);
}

}  // namespace atgrid
