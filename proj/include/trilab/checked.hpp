#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace trilab {

using Int = std::int64_t;

// All lattice arithmetic is exact: 64-bit values with hard overflow errors.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    if (a == INT64_MIN) throw std::overflow_error("integer overflow in negation");
    return -a;
}

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

inline Int gcd(Int a, Int b) { return std::gcd(checked_abs(a), checked_abs(b)); }

// floor division and nonnegative remainder for possibly negative numerators
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_nonneg(Int a, Int b) {
    Int r = a % b;
    if (r < 0) r += checked_abs(b);
    return r;
}

}  // namespace trilab
