#pragma once

#include <string>

#include "trilab/checked.hpp"

namespace trilab {

// Exact rational with reduced numerator/denominator, denominator > 0.
struct Rational {
    Int num{0};
    Int den{1};

    bool is_integer() const { return den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational rational(Int num, Int den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    Int g = gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

inline bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

inline bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
}
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

inline Rational operator+(const Rational& a, const Rational& b) {
    return rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den));
}

inline Rational operator-(const Rational& a, const Rational& b) {
    return rational(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den));
}

inline Rational operator*(const Rational& a, const Rational& b) {
    return rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

}  // namespace trilab
