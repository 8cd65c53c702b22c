#pragma once

#include <optional>
#include <vector>

#include "trilab/geometry.hpp"

namespace trilab {

// Lexicographically minimal width pair over linearly independent primitive duals,
// with sign-canonical witnesses. The point triangle carries no witnesses.
struct WidthProfile {
    Int w1{0};
    Int w2{0};
    std::optional<DualVector> u1;
    std::optional<DualVector> u2;
};

// The box [0,w] x [0,h].
struct Rectangle {
    Int w{0};
    Int h{0};
};

inline bool operator==(Rectangle a, Rectangle b) { return a.w == b.w && a.h == b.h; }

struct FitResult {
    Triangle triangle;
    UnimodularMap map;
    Rectangle box;
};

namespace detail {

// Minimizes the spread of y + k*x over the vertices, over integer k.
// The spread is convex piecewise linear in k, so it suffices to test the
// floor/ceil of the pairwise slopes -(yi-yj)/(xi-xj).
struct ShearChoice {
    Int k;
    Int spread;
};

inline Int shear_spread(const Triangle& t, Int k) {
    DualVector u{k, 1};
    return width_along(t, u);
}

inline ShearChoice best_shear(const Triangle& t) {
    std::vector<Int> candidates{0};
    Point vs[3] = {t.v1, t.v2, t.v3};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Int dx = checked_sub(vs[j].x, vs[i].x);
            Int dy = checked_sub(vs[j].y, vs[i].y);
            if (dx == 0) continue;
            Int q = floor_div(checked_neg(dy), dx);
            candidates.push_back(q);
            candidates.push_back(checked_add(q, 1));
        }
    }
    ShearChoice best{0, shear_spread(t, 0)};
    for (Int k : candidates) {
        Int s = shear_spread(t, k);
        if (s < best.spread || (s == best.spread && k < best.k)) best = {k, s};
    }
    return best;
}

// Shear/swap reduction: returns a map whose image of t has small axis widths
// (x-width <= y-width, no vertical shear improves further).
inline UnimodularMap reduce_for_search(const Triangle& t) {
    UnimodularMap acc = translation(checked_neg(t.v1.x), checked_neg(t.v1.y));
    Triangle w = apply(acc, t);
    for (;;) {
        Int wx = width_along(w, {1, 0});
        Int wy = width_along(w, {0, 1});
        if (wx > wy) {
            UnimodularMap swap{0, 1, 1, 0, 0, 0};
            acc = compose(swap, acc);
            w = apply(swap, w);
            wy = wx;
        }
        ShearChoice c = best_shear(w);
        if (c.spread >= wy) break;
        UnimodularMap shear{1, 0, c.k, 1, 0, 0};
        acc = compose(shear, acc);
        w = apply(shear, w);
    }
    return acc;
}

struct WidthCandidate {
    Int w;
    DualVector u;  // sign-canonical primitive
};

// Every primitive u with width_u(t) <= bound, for a nondegenerate triangle.
// Any such u satisfies |u.e| <= bound for each edge vector e, so solving
// (u.e1, u.e2) = (c1, c2) over the grid [-bound, bound]^2 is exhaustive.
inline std::vector<WidthCandidate> width_candidates(const Triangle& t, Int bound) {
    Point e1 = t.v2 - t.v1;
    Point e2 = t.v3 - t.v1;
    Int d = det2(e1, e2);
    if (d == 0) throw std::invalid_argument("width search requires a nondegenerate triangle");
    std::vector<WidthCandidate> out;
    for (Int c1 = -bound; c1 <= bound; ++c1) {
        for (Int c2 = 0; c2 <= bound; ++c2) {  // (c1,c2) and -(c1,c2) give the same canonical u
            if (c2 == 0 && c1 <= 0) continue;
            Int na = checked_sub(checked_mul(c1, e2.y), checked_mul(c2, e1.y));
            Int nb = checked_sub(checked_mul(c2, e1.x), checked_mul(c1, e2.x));
            if (na % d != 0 || nb % d != 0) continue;
            DualVector u{na / d, nb / d};
            if (!is_primitive(u)) continue;  // the primitive multiple shows up at smaller (c1,c2)
            u = canonical_sign(u);
            Int w = width_along(t, u);
            if (w <= bound) out.push_back({w, u});
        }
    }
    std::sort(out.begin(), out.end(), [](const WidthCandidate& p, const WidthCandidate& q) {
        if (p.u != q.u) return p.u < q.u;
        return p.w < q.w;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const WidthCandidate& p, const WidthCandidate& q) { return p.u == q.u; }),
              out.end());
    std::sort(out.begin(), out.end(), [](const WidthCandidate& p, const WidthCandidate& q) {
        if (p.w != q.w) return p.w < q.w;
        return p.u < q.u;
    });
    return out;
}

// 1-dimensional view of a degenerate triangle: primitive direction and the
// integer positions of the three vertices along it.
struct SegmentView {
    Point direction;            // primitive
    std::array<Int, 3> params;  // v_i = base + params[i] * direction
};

inline SegmentView segment_view(const Triangle& t) {
    Point d{0, 0};
    for (Point diff : {t.v2 - t.v1, t.v3 - t.v1, t.v3 - t.v2}) {
        if (diff != Point{0, 0}) {
            d = diff;
            break;
        }
    }
    if (d == Point{0, 0}) throw std::invalid_argument("point triangle has no direction");
    Int g = gcd(d.x, d.y);
    d = {d.x / g, d.y / g};
    auto param = [&](Point p) {
        Point r = p - t.v1;
        Int s = d.x != 0 ? r.x / d.x : r.y / d.y;
        if (s * d.x != r.x || s * d.y != r.y) throw std::logic_error("vertices are not collinear");
        return s;
    };
    return {d, {param(t.v1), param(t.v2), param(t.v3)}};
}

// Deterministic representative of the infinite family {+-(u0 + k*step) : k}:
// smallest box norm, then smallest coordinate sum, then lexicographic, all
// after sign canonicalization. Plain lex order has no minimum on such a line.
inline DualVector reduced_witness(DualVector u0, DualVector step) {
    Int window = 2 * (checked_abs(u0.a) + checked_abs(u0.b) + checked_abs(step.a) + checked_abs(step.b)) + 2;
    auto key = [](DualVector u) {
        return std::array<Int, 4>{std::max(checked_abs(u.a), checked_abs(u.b)),
                                  checked_add(checked_abs(u.a), checked_abs(u.b)), u.a, u.b};
    };
    std::optional<DualVector> best;
    for (Int k = -window; k <= window; ++k) {
        DualVector u = canonical_sign({checked_add(u0.a, checked_mul(k, step.a)),
                                       checked_add(u0.b, checked_mul(k, step.b))});
        if (!best || key(u) < key(*best)) best = u;
    }
    return *best;
}

}  // namespace detail

inline WidthProfile width_profile(const Triangle& t) {
    if (is_degenerate(t)) {
        if (t.v1 == t.v2 && t.v2 == t.v3) return {0, 0, std::nullopt, std::nullopt};
        detail::SegmentView view = detail::segment_view(t);
        auto [lo, hi] = std::minmax_element(view.params.begin(), view.params.end());
        Int length = *hi - *lo;
        DualVector normal = canonical_sign({checked_neg(view.direction.y), view.direction.x});
        // any primitive functional evaluating to +-1 on the direction witnesses the second width
        UnimodularMap rows = complete_to_unimodular(normal);
        DualVector u2 = detail::reduced_witness({rows.m21, rows.m22}, normal);
        return {0, length, normal, u2};
    }

    UnimodularMap reduction = detail::reduce_for_search(t);
    Triangle reduced = apply(reduction, t);
    Int bound = std::max(width_along(reduced, {1, 0}), width_along(reduced, {0, 1}));
    std::vector<detail::WidthCandidate> cands = detail::width_candidates(reduced, bound);
    if (cands.empty()) throw std::logic_error("width candidate search came back empty");

    Int w1 = cands[0].w;
    std::vector<DualVector> first_attainers;
    for (const auto& c : cands)
        if (c.w == w1) first_attainers.push_back(c.u);

    auto back_to_input = [&](DualVector u) { return canonical_sign(transport(u, reduction)); };

    if (first_attainers.size() >= 2) {
        // two distinct canonical primitives are automatically independent
        std::vector<DualVector> transported;
        for (DualVector u : first_attainers) transported.push_back(back_to_input(u));
        std::sort(transported.begin(), transported.end());
        return {w1, w1, transported[0], transported[1]};
    }

    DualVector u1_reduced = first_attainers[0];
    Int w2 = -1;
    std::vector<DualVector> second_attainers;
    for (const auto& c : cands) {
        if (c.u == u1_reduced) continue;
        if (w2 < 0) w2 = c.w;
        if (c.w == w2) second_attainers.push_back(c.u);
    }
    if (w2 < 0) throw std::logic_error("no independent second width direction found");
    std::vector<DualVector> transported;
    for (DualVector u : second_attainers) transported.push_back(back_to_input(u));
    return {w1, w2, back_to_input(u1_reduced), *std::min_element(transported.begin(), transported.end())};
}

// Maps t into [0,w1] x [0,w2] so that both coordinates touch 0 and their width.
// Already-fitted triangles come back unchanged with the identity map.
inline FitResult fit_to_rectangle(const Triangle& t) {
    WidthProfile p = width_profile(t);
    Rectangle box{p.w1, p.w2};

    auto fitted = [&](const Triangle& s) {
        Int xs[3] = {s.v1.x, s.v2.x, s.v3.x};
        Int ys[3] = {s.v1.y, s.v2.y, s.v3.y};
        return *std::min_element(xs, xs + 3) == 0 && *std::max_element(xs, xs + 3) == p.w1 &&
               *std::min_element(ys, ys + 3) == 0 && *std::max_element(ys, ys + 3) == p.w2;
    };
    if (fitted(t)) return {t, identity_map(), box};

    if (!p.u1.has_value()) {  // point triangle
        UnimodularMap m = translation(checked_neg(t.v1.x), checked_neg(t.v1.y));
        return {apply(m, t), m, box};
    }

    UnimodularMap m = complete_to_unimodular(*p.u1);
    Triangle w = apply(m, t);
    if (p.w1 > 0) {
        detail::ShearChoice c = detail::best_shear(w);
        if (c.spread != p.w2) throw std::logic_error("shear reduction failed to reach the second width");
        UnimodularMap shear{1, 0, c.k, 1, 0, 0};
        m = compose(shear, m);
        w = apply(shear, w);
    }
    Int xs[3] = {w.v1.x, w.v2.x, w.v3.x};
    Int ys[3] = {w.v1.y, w.v2.y, w.v3.y};
    UnimodularMap shift = translation(checked_neg(*std::min_element(xs, xs + 3)),
                                      checked_neg(*std::min_element(ys, ys + 3)));
    m = compose(shift, m);
    w = apply(shift, w);
    if (!fitted(w)) throw std::logic_error("fit_to_rectangle postcondition violated");
    return {w, m, box};
}

}  // namespace trilab
