#pragma once

#include <map>
#include <vector>

#include "trilab/normal_form.hpp"

namespace trilab {

// Emits every normal form with widths (w1, w2) exactly once, families in
// declaration order, parameters ascending (x2, then y0, then y1).
template <class F>
inline void for_each_normal_form(Int w1, Int w2, F&& fn) {
    if (w1 < 0 || w1 > w2) throw std::invalid_argument("normal form enumeration requires 0 <= w1 <= w2");
    const Point o{0, 0};
    if (w1 == 0) {
        for (Int y1 = 0; 2 * y1 <= w2; ++y1)
            fn(NormalForm{Family::Segment, 0, w2, 0, 0, y1, Triangle{o, {0, y1}, {0, w2}}});
        return;
    }
    for (Int y1 = 0; y1 < w1; ++y1)
        if (y1 <= mod_nonneg(w2 - y1, w1))
            fn(NormalForm{Family::LongEdge, w1, w2, 0, 0, y1, Triangle{o, {w1, y1}, {0, w2}}});
    for (Int x2 = 1; 2 * x2 <= w1; ++x2)
        for (Int y1 = (w1 == w2 ? x2 : 0); y1 <= w1 - x2; ++y1)
            fn(NormalForm{Family::ShortEdge1, w1, w2, x2, 0, y1, Triangle{o, {w1, y1}, {x2, w2}}});
    if (w1 < w2)
        for (Int x2 = 2; 2 * x2 < w1; ++x2)
            for (Int y0 = 1; y0 < x2; ++y0)
                fn(NormalForm{Family::ShortEdge2, w1, w2, x2, y0, 0, Triangle{{0, y0}, {w1, 0}, {x2, w2}}});
}

inline std::vector<NormalForm> normal_forms(Int w1, Int w2) {
    std::vector<NormalForm> out;
    for_each_normal_form(w1, w2, [&](const NormalForm& nf) { out.push_back(nf); });
    return out;
}

// Number of equivalence classes with widths (w1, w2), by the parity-cased closed form.
inline Int class_count(Int w1, Int w2) {
    if (w1 < 0 || w1 > w2) throw std::invalid_argument("class_count requires 0 <= w1 <= w2");
    if (w1 == 0) return w2 / 2 + 1;
    Int sq = checked_mul(w1, w1);
    if (w1 == w2) {
        if (w1 % 2 == 0) return sq / 4 + w1 / 2 + 1;
        return (sq + 2 * w1 + 1) / 4;
    }
    if (w1 % 2 == 0) return sq / 2 + (w2 % 2 == 0 ? 2 : 1);
    return (sq + 1) / 2;
}

// Number of classes equivalent to a subset of [0,w1] x [0,w2]; quartic closed
// form with four parity cases, evaluated exactly over a common denominator 24.
inline Int rectangle_class_count(Int w1, Int w2) {
    if (w1 < 0 || w1 > w2) throw std::invalid_argument("rectangle_class_count requires 0 <= w1 <= w2");
    Int a = w1, b = w2;
    Int a2 = checked_mul(a, a), a3 = checked_mul(a2, a), a4 = checked_mul(a3, a);
    Int s = 0;
    s = checked_add(s, checked_mul(-3, a4));
    s = checked_add(s, checked_mul(4, checked_mul(a3, b)));
    s = checked_add(s, checked_mul(-4, a3));
    s = checked_add(s, checked_mul(6, checked_mul(a2, b)));
    s = checked_add(s, checked_mul(-6, a2));
    s = checked_add(s, checked_mul(26, checked_mul(a, b)));
    s = checked_add(s, checked_mul(6, checked_mul(b, b)));
    bool ae = a % 2 == 0, be = b % 2 == 0;
    if (ae && be)
        s = checked_add(s, checked_add(checked_mul(4, a), checked_add(checked_mul(24, b), 24)));
    else if (ae && !be)
        s = checked_add(s, checked_add(checked_mul(-2, a), checked_add(checked_mul(24, b), 18)));
    else if (!ae && be)
        s = checked_add(s, checked_add(checked_mul(16, a), checked_add(checked_mul(12, b), 21)));
    else
        s = checked_add(s, checked_add(checked_mul(10, a), checked_add(checked_mul(12, b), 21)));
    if (s % 24 != 0) throw std::logic_error("rectangle count polynomial did not produce an integer");
    return s / 24;
}

// Number of classes equivalent to a subset of [0,n]^2.
inline Int square_class_count(Int n) {
    if (n < 0) throw std::invalid_argument("square_class_count requires n >= 0");
    return rectangle_class_count(n, n);
}

struct CountTable {
    Int max_w1{0};
    Int max_w2{0};
    std::map<std::pair<Int, Int>, Int> entries;  // defined for 0 <= w1 <= min(max_w1, w2), w2 <= max_w2
};

inline CountTable count_table(Int max_w1, Int max_w2) {
    CountTable t{max_w1, max_w2, {}};
    for (Int w1 = 0; w1 <= max_w1; ++w1)
        for (Int w2 = w1; w2 <= max_w2; ++w2) t.entries[{w1, w2}] = class_count(w1, w2);
    return t;
}

}  // namespace trilab
