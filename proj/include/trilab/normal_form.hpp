#pragma once

#include <optional>
#include <string>

#include "trilab/widths.hpp"

namespace trilab {

// The four families of normal-form triangles with widths w1 <= w2:
//   Segment:    T((0,0),(0,y1),(0,w2)),        0 <= y1 <= w2/2          (w1 == 0)
//   LongEdge:   T((0,0),(w1,y1),(0,w2)),       y1 <= (w2 - y1) mod w1
//   ShortEdge1: T((0,0),(w1,y1),(x2,w2)),      0 < x2 <= w1/2, y1 <= w1 - x2,
//                                              y1 >= x2 when w1 == w2
//   ShortEdge2: T((0,y0),(w1,0),(x2,w2)),      1 < x2 < w1/2, 0 < y0 < x2, w1 < w2
enum class Family { Segment, LongEdge, ShortEdge1, ShortEdge2 };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Segment: return "segment";
        case Family::LongEdge: return "long-edge";
        case Family::ShortEdge1: return "short-edge-1";
        case Family::ShortEdge2: return "short-edge-2";
    }
    return "?";
}

struct NormalForm {
    Family family{Family::Segment};
    Int w1{0};
    Int w2{0};
    Int x2{0};
    Int y0{0};
    Int y1{0};
    Triangle triangle;
};

inline bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.family == b.family && a.triangle == b.triangle;
}

// Literal pattern match of the ordered vertex triple against the families above.
inline std::optional<NormalForm> match_normal_form(const Triangle& t) {
    const Point o{0, 0};
    if (t.v1 == o && t.v2.x == 0 && t.v3.x == 0) {
        Int y1 = t.v2.y, w2 = t.v3.y;
        if (w2 >= 0 && y1 >= 0 && 2 * y1 <= w2)
            return NormalForm{Family::Segment, 0, w2, 0, 0, y1, t};
        return std::nullopt;
    }
    if (t.v1 == o && t.v2.x >= 1 && t.v3.x == 0) {
        Int w1 = t.v2.x, y1 = t.v2.y, w2 = t.v3.y;
        if (w1 <= w2 && y1 >= 0 && y1 <= mod_nonneg(w2 - y1, w1))
            return NormalForm{Family::LongEdge, w1, w2, 0, 0, y1, t};
        return std::nullopt;
    }
    if (t.v1 == o && t.v2.x >= 1 && t.v3.x >= 1) {
        Int w1 = t.v2.x, y1 = t.v2.y, x2 = t.v3.x, w2 = t.v3.y;
        if (w1 <= w2 && 2 * x2 <= w1 && y1 >= 0 && y1 <= w1 - x2 && (w1 != w2 || y1 >= x2))
            return NormalForm{Family::ShortEdge1, w1, w2, x2, 0, y1, t};
        return std::nullopt;
    }
    if (t.v1.x == 0 && t.v1.y >= 1 && t.v2.y == 0 && t.v2.x >= 1) {
        Int y0 = t.v1.y, w1 = t.v2.x, x2 = t.v3.x, w2 = t.v3.y;
        if (w1 < w2 && x2 >= 2 && 2 * x2 < w1 && y0 < x2)
            return NormalForm{Family::ShortEdge2, w1, w2, x2, y0, 0, t};
        return std::nullopt;
    }
    return std::nullopt;
}

namespace detail {

// Homogeneous 3x3 matrices over the integers; columns are vertices with an appended 1.
struct Mat3 {
    Int m[3][3];
};

inline Mat3 vertex_matrix(const Triangle& t) {
    return {{{t.v1.x, t.v2.x, t.v3.x}, {t.v1.y, t.v2.y, t.v3.y}, {1, 1, 1}}};
}

inline Int det3(const Mat3& a) {
    Int d = 0;
    d = checked_add(d, checked_mul(a.m[0][0], checked_sub(checked_mul(a.m[1][1], a.m[2][2]),
                                                          checked_mul(a.m[1][2], a.m[2][1]))));
    d = checked_sub(d, checked_mul(a.m[0][1], checked_sub(checked_mul(a.m[1][0], a.m[2][2]),
                                                          checked_mul(a.m[1][2], a.m[2][0]))));
    d = checked_add(d, checked_mul(a.m[0][2], checked_sub(checked_mul(a.m[1][0], a.m[2][1]),
                                                          checked_mul(a.m[1][1], a.m[2][0]))));
    return d;
}

inline Mat3 adjugate(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            // adj[j][i] = cofactor(i,j); the cyclic index choice absorbs the sign
            r.m[j][i] = checked_sub(checked_mul(a.m[r0][c0], a.m[r1][c1]),
                                    checked_mul(a.m[r0][c1], a.m[r1][c0]));
        }
    }
    return r;
}

inline Mat3 mul3(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s = checked_add(s, checked_mul(a.m[i][k], b.m[k][j]));
            r.m[i][j] = s;
        }
    return r;
}

inline Mat3 permute_columns(const Mat3& a, const std::array<int, 3>& sigma) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][sigma[j]];
    return r;
}

inline constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2},  // id
    {1, 0, 2},  // (12)
    {2, 1, 0},  // (13)
    {0, 2, 1},  // (23)
    {1, 2, 0},  // (123)
    {2, 0, 1},  // (132)
}};

inline const char* permutation_name(int index) {
    constexpr const char* names[6] = {"id", "(12)", "(13)", "(23)", "(123)", "(132)"};
    return names[index];
}

// (perm_target * B) * adj(A) scaled by det(A): engaged when the quotient is an
// integral affine unimodular map.
inline std::optional<UnimodularMap> permuted_quotient(const Mat3& b_perm, const Mat3& adj_a, Int det_a) {
    Mat3 n = mul3(b_perm, adj_a);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (n.m[i][j] % det_a != 0) return std::nullopt;
    UnimodularMap m{n.m[0][0] / det_a, n.m[0][1] / det_a,
                    n.m[1][0] / det_a, n.m[1][1] / det_a,
                    n.m[0][2] / det_a, n.m[1][2] / det_a};
    Int d = m.det();
    if (d != 1 && d != -1) return std::nullopt;
    return m;
}

inline std::optional<UnimodularMap> equivalence_map_degenerate(const Triangle& s, const Triangle& t) {
    bool s_point = s.v1 == s.v2 && s.v2 == s.v3;
    bool t_point = t.v1 == t.v2 && t.v2 == t.v3;
    if (s_point || t_point) {
        if (!(s_point && t_point)) return std::nullopt;
        return translation(t.v1.x - s.v1.x, t.v1.y - s.v1.y);
    }
    // 1-dimensional invariant: (length, offset of the middle vertex up to flip)
    FitResult fs = fit_to_rectangle(s);
    FitResult ft = fit_to_rectangle(t);
    if (fs.box.h != ft.box.h) return std::nullopt;
    Int w2 = fs.box.h;
    auto middle = [](const Triangle& a) {
        Int ys[3] = {a.v1.y, a.v2.y, a.v3.y};
        std::sort(ys, ys + 3);
        return ys[1];
    };
    Int ms = middle(fs.triangle), mt = middle(ft.triangle);
    if (ms != mt && ms != w2 - mt) return std::nullopt;
    UnimodularMap bridge = identity_map();
    if (ms != mt) bridge = UnimodularMap{1, 0, 0, -1, 0, w2};
    return compose(inverse(ft.map), compose(bridge, fs.map));
}

}  // namespace detail

// Witness of affine unimodular equivalence between the vertex multisets, if any.
inline std::optional<UnimodularMap> equivalence_map(const Triangle& s, const Triangle& t) {
    Int vs = normalized_volume(s);
    Int vt = normalized_volume(t);
    if (vs != vt) return std::nullopt;
    if (vs == 0) return detail::equivalence_map_degenerate(s, t);

    detail::Mat3 a = detail::vertex_matrix(s);
    detail::Mat3 b = detail::vertex_matrix(t);
    Int det_a = detail::det3(a);
    detail::Mat3 adj_a = detail::adjugate(a);
    for (const auto& sigma : detail::kPermutations) {
        auto m = detail::permuted_quotient(detail::permute_columns(b, sigma), adj_a, det_a);
        if (m) return m;
    }
    return std::nullopt;
}

inline bool are_equivalent(const Triangle& s, const Triangle& t) {
    return equivalence_map(s, t).has_value();
}

}  // namespace trilab
