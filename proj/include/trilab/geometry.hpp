#pragma once

#include <algorithm>
#include <array>

#include "trilab/checked.hpp"

namespace trilab {

struct Point {
    Int x{0};
    Int y{0};
};

inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point a, Point b) { return !(a == b); }
inline bool operator<(Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
inline Point operator+(Point a, Point b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
inline Point operator-(Point a, Point b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }
inline Point operator*(Int k, Point p) { return {checked_mul(k, p.x), checked_mul(k, p.y)}; }

// Linear functional on the lattice, written as a row vector.
struct DualVector {
    Int a{0};
    Int b{0};
};

inline bool operator==(DualVector u, DualVector v) { return u.a == v.a && u.b == v.b; }
inline bool operator!=(DualVector u, DualVector v) { return !(u == v); }
inline bool operator<(DualVector u, DualVector v) { return u.a != v.a ? u.a < v.a : u.b < v.b; }

inline Int dot(DualVector u, Point p) {
    return checked_add(checked_mul(u.a, p.x), checked_mul(u.b, p.y));
}

inline bool is_primitive(DualVector u) { return (u.a != 0 || u.b != 0) && gcd(u.a, u.b) == 1; }

// Canonical sign: a > 0, or a == 0 and b > 0.
inline DualVector canonical_sign(DualVector u) {
    if (u.a < 0 || (u.a == 0 && u.b < 0)) return {checked_neg(u.a), checked_neg(u.b)};
    return u;
}

// Ordered vertex triple; collinear or repeated vertices are allowed.
struct Triangle {
    Point v1, v2, v3;

    Point vertex(int i) const { return i == 0 ? v1 : (i == 1 ? v2 : v3); }
};

inline bool operator==(const Triangle& s, const Triangle& t) {
    return s.v1 == t.v1 && s.v2 == t.v2 && s.v3 == t.v3;
}
inline bool operator!=(const Triangle& s, const Triangle& t) { return !(s == t); }

inline Int det2(Point a, Point b) {
    return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}

// |det(v2-v1, v3-v1)|: twice the Euclidean area, zero exactly for degenerate triples.
inline Int normalized_volume(const Triangle& t) {
    return checked_abs(det2(t.v2 - t.v1, t.v3 - t.v1));
}

inline bool is_degenerate(const Triangle& t) { return normalized_volume(t) == 0; }

inline Int width_along(const Triangle& t, DualVector u) {
    Int d1 = dot(u, t.v1), d2 = dot(u, t.v2), d3 = dot(u, t.v3);
    return std::max({d1, d2, d3}) - std::min({d1, d2, d3});
}

// Number of lattice points on the open segment (a,b) plus one; gcd of the coordinate gaps.
inline Int lattice_length(Point a, Point b) { return gcd(b.x - a.x, b.y - a.y); }

// x -> M x + t with det M = +-1.
struct UnimodularMap {
    Int m11{1}, m12{0}, m21{0}, m22{1};
    Int t1{0}, t2{0};

    Int det() const { return checked_sub(checked_mul(m11, m22), checked_mul(m12, m21)); }
};

inline bool operator==(const UnimodularMap& f, const UnimodularMap& g) {
    return f.m11 == g.m11 && f.m12 == g.m12 && f.m21 == g.m21 && f.m22 == g.m22 && f.t1 == g.t1 && f.t2 == g.t2;
}

inline UnimodularMap identity_map() { return {}; }

inline UnimodularMap translation(Int t1, Int t2) { return {1, 0, 0, 1, t1, t2}; }

inline void require_unimodular(const UnimodularMap& m) {
    Int d = m.det();
    if (d != 1 && d != -1) throw std::invalid_argument("affine map is not unimodular (det must be +-1)");
}

inline Point apply(const UnimodularMap& m, Point p) {
    return {checked_add(checked_add(checked_mul(m.m11, p.x), checked_mul(m.m12, p.y)), m.t1),
            checked_add(checked_add(checked_mul(m.m21, p.x), checked_mul(m.m22, p.y)), m.t2)};
}

inline Triangle apply(const UnimodularMap& m, const Triangle& t) {
    require_unimodular(m);
    return {apply(m, t.v1), apply(m, t.v2), apply(m, t.v3)};
}

// outer(inner(x))
inline UnimodularMap compose(const UnimodularMap& outer, const UnimodularMap& inner) {
    UnimodularMap r;
    r.m11 = checked_add(checked_mul(outer.m11, inner.m11), checked_mul(outer.m12, inner.m21));
    r.m12 = checked_add(checked_mul(outer.m11, inner.m12), checked_mul(outer.m12, inner.m22));
    r.m21 = checked_add(checked_mul(outer.m21, inner.m11), checked_mul(outer.m22, inner.m21));
    r.m22 = checked_add(checked_mul(outer.m21, inner.m12), checked_mul(outer.m22, inner.m22));
    Point t = apply(outer, Point{inner.t1, inner.t2});
    r.t1 = t.x;
    r.t2 = t.y;
    return r;
}

inline UnimodularMap inverse(const UnimodularMap& m) {
    Int d = m.det();
    if (d != 1 && d != -1) throw std::invalid_argument("affine map is not unimodular (det must be +-1)");
    UnimodularMap r;
    r.m11 = checked_mul(d, m.m22);
    r.m12 = checked_mul(d, checked_neg(m.m12));
    r.m21 = checked_mul(d, checked_neg(m.m21));
    r.m22 = checked_mul(d, m.m11);
    r.t1 = checked_neg(checked_add(checked_mul(r.m11, m.t1), checked_mul(r.m12, m.t2)));
    r.t2 = checked_neg(checked_add(checked_mul(r.m21, m.t1), checked_mul(r.m22, m.t2)));
    return r;
}

// Transport of a functional: width_u(apply(m, t)) == width_{transport(u, m)}(t).
inline DualVector transport(DualVector u, const UnimodularMap& m) {
    return {checked_add(checked_mul(u.a, m.m11), checked_mul(u.b, m.m21)),
            checked_add(checked_mul(u.a, m.m12), checked_mul(u.b, m.m22))};
}

// Completes a primitive row (a,b) to a determinant +1 matrix via the extended gcd.
inline UnimodularMap complete_to_unimodular(DualVector first_row) {
    if (!is_primitive(first_row)) throw std::invalid_argument("row must be primitive");
    Int old_r = first_row.a, r = first_row.b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - checked_mul(q, s);
        old_s = s;
        s = tmp;
        tmp = old_t - checked_mul(q, t);
        old_t = t;
        t = tmp;
    }
    // old_s*a + old_t*b == old_r == +-1
    if (old_r < 0) {
        old_s = checked_neg(old_s);
        old_t = checked_neg(old_t);
    }
    UnimodularMap m{first_row.a, first_row.b, checked_neg(old_t), old_s, 0, 0};
    require_unimodular(m);
    return m;
}

}  // namespace trilab
