#pragma once

#include <set>

#include "trilab/geometry.hpp"
#include "trilab/rational.hpp"

namespace trilab {

// Boundary and interior lattice point counts of a nondegenerate triangle.
struct BIPoint {
    Int b{0};
    Int i{0};
};

inline bool operator==(BIPoint p, BIPoint q) { return p.b == q.b && p.i == q.i; }
inline bool operator<(BIPoint p, BIPoint q) { return p.b != q.b ? p.b < q.b : p.i < q.i; }

inline void require_nondegenerate(const Triangle& t) {
    if (is_degenerate(t)) throw std::invalid_argument("operation requires a nondegenerate triangle");
}

// b from the edge gcd sums, i by Pick: V = 2i + b - 2.
inline BIPoint boundary_interior(const Triangle& t) {
    require_nondegenerate(t);
    Int b = checked_add(checked_add(lattice_length(t.v1, t.v2), lattice_length(t.v2, t.v3)),
                        lattice_length(t.v3, t.v1));
    Int v = normalized_volume(t);
    Int twice_i = checked_add(checked_sub(v, b), 2);
    if (twice_i < 0 || twice_i % 2 != 0) throw std::logic_error("Pick's identity failed");
    return {b, twice_i / 2};
}

// (i + b/2 - 1) n^2 + (b/2) n + 1
struct EhrhartPolynomial {
    Rational c2, c1, c0;

    Int operator()(Int n) const {
        Rational value = c2 * rational(checked_mul(n, n)) + c1 * rational(n) + c0;
        if (!value.is_integer()) throw std::logic_error("Ehrhart polynomial produced a non-integer");
        return value.num;
    }
};

inline EhrhartPolynomial ehrhart_polynomial(const Triangle& t) {
    BIPoint p = boundary_interior(t);
    return {rational(checked_sub(checked_add(checked_mul(2, p.i), p.b), 2), 2), rational(p.b, 2), rational(1)};
}

// Edges are indexed 0..2; edge e joins vertices e and e+1 (mod 3).
struct EdgeWidth {
    int edge;
    Int width;
};

// Width with respect to the primitive inner normal of each edge; equals
// the normalized volume divided by the edge's lattice length.
inline std::array<EdgeWidth, 3> edge_widths(const Triangle& t) {
    require_nondegenerate(t);
    Int v = normalized_volume(t);
    std::array<EdgeWidth, 3> out;
    for (int e = 0; e < 3; ++e) {
        Int len = lattice_length(t.vertex(e), t.vertex((e + 1) % 3));
        if (v % len != 0) throw std::logic_error("edge width is not integral");
        out[e] = {e, v / len};
    }
    return out;
}

// Sends edge e onto the positive x-axis starting at the origin with the third
// vertex above, then stretches the horizontal edge by k times the edge width.
inline Triangle extend_edge(const Triangle& t, int edge, Int k) {
    require_nondegenerate(t);
    if (edge < 0 || edge > 2) throw std::invalid_argument("edge index must be 0, 1 or 2");
    Point a = t.vertex(edge);
    Point b = t.vertex((edge + 1) % 3);
    Point dir = b - a;
    Int len = gcd(dir.x, dir.y);
    dir = {dir.x / len, dir.y / len};
    // rows (p,q) with p*dir.x + q*dir.y = 1 and (-dir.y, dir.x) send dir to (1,0)
    UnimodularMap bezout = complete_to_unimodular({dir.x, dir.y});
    UnimodularMap frame{bezout.m22, checked_neg(bezout.m21), checked_neg(dir.y), dir.x, 0, 0};
    require_unimodular(frame);
    frame = compose(frame, translation(checked_neg(a.x), checked_neg(a.y)));
    Triangle f = apply(frame, t);
    Point third = f.vertex((edge + 2) % 3);
    if (third.y < 0) {
        UnimodularMap flip{1, 0, 0, -1, 0, 0};
        frame = compose(flip, frame);
        f = apply(flip, f);
        third = f.vertex((edge + 2) % 3);
    }
    Int w = third.y;
    Int stretched = checked_add(len, checked_mul(k, w));
    if (stretched <= 0) throw std::invalid_argument("extension collapses the edge");
    return Triangle{{0, 0}, {stretched, 0}, {third.x, third.y}};
}

// Open cone between the lines i = (c-1)/2 b - (c-1) and i = c/2 b - c(c+2).
inline bool cone_contains(Int c, BIPoint p) {
    if (c < 1) throw std::invalid_argument("cone index must be positive");
    Int lower = checked_mul(checked_sub(c, 1), checked_sub(p.b, 2));  // 2 * ((c-1)/2 b - (c-1))
    Int upper = checked_sub(checked_mul(c, p.b),
                            checked_mul(checked_mul(2, c), checked_add(c, 2)));  // 2 * (c/2 b - c(c+2))
    Int two_i = checked_mul(2, p.i);
    return lower < two_i && two_i < upper;
}

// Offset m with i = (w-1)/2 b + m; lands in [1-w^2, 1-w] for realized pairs.
inline Rational strip_line_index(BIPoint p, Int w) {
    if (w < 1) throw std::invalid_argument("width must be positive");
    return rational(checked_sub(checked_mul(2, p.i), checked_mul(checked_sub(w, 1), p.b)), 2);
}

// Line carrying the (b,i) points of the edge-extension family of a triangle.
struct EdgeExtensionLine {
    Int w{1};
    BIPoint base;
    Rational slope;  // (w-1)/2

    bool contains(BIPoint p) const {
        // i - base.i == slope * (b - base.b)
        return rational(checked_sub(p.i, base.i)) == slope * rational(checked_sub(p.b, base.b));
    }
};

inline EdgeExtensionLine extension_line(const Triangle& t, int edge) {
    if (edge < 0 || edge > 2) throw std::invalid_argument("edge index must be 0, 1 or 2");
    Int w = edge_widths(t)[static_cast<size_t>(edge)].width;
    return {w, boundary_interior(t), rational(checked_sub(w, 1), 2)};
}

struct GcdPairSet {
    Int a{1};
    Int b{1};
    std::set<std::pair<Int, Int>> pairs;
};

// { (gcd(a,c), gcd(a,b-c)) : c in Z }, finite by periodicity mod a.
inline GcdPairSet gcd_pair_set(Int a, Int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gcd_pair_set requires positive arguments");
    GcdPairSet out{a, b, {}};
    for (Int c = 0; c < a; ++c) out.pairs.insert({gcd(a, c), gcd(a, checked_sub(b, c))});
    return out;
}

}  // namespace trilab
