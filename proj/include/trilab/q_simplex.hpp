#pragma once

#include <array>
#include <vector>

#include "trilab/checked.hpp"

namespace trilab {

// The rational 4-simplex whose dilate point counts match the square counts.
// Vertices (1/2,0,0,0), (0,1/2,0,0), (0,0,1/2,0), (0,0,0,1), (-1,-1,-1,-1),
// stored doubled so everything stays integral.
struct QSimplex {
    std::array<std::array<Int, 4>, 5> doubled_vertices{{{1, 0, 0, 0},
                                                        {0, 1, 0, 0},
                                                        {0, 0, 1, 0},
                                                        {0, 0, 0, 2},
                                                        {-2, -2, -2, -2}}};

    // Facet inequality a.x <= n * c / 2 for the dilate by n, with integral a and c.
    struct Facet {
        std::array<Int, 4> normal;
        Int doubled_offset;
    };

    std::array<Facet, 5> facets;

    QSimplex() {
        // each facet spans four vertices; the generalized cross product of the
        // three edge vectors gives the normal, oriented away from the fifth vertex
        for (int skip = 0; skip < 5; ++skip) {
            std::array<std::array<Int, 4>, 4> pts;
            int n = 0;
            for (int i = 0; i < 5; ++i)
                if (i != skip) pts[n++] = doubled_vertices[i];
            std::array<std::array<Int, 4>, 3> edges;
            for (int e = 0; e < 3; ++e)
                for (int j = 0; j < 4; ++j) edges[e][j] = checked_sub(pts[e + 1][j], pts[0][j]);
            std::array<Int, 4> normal{};
            for (int j = 0; j < 4; ++j) {
                Int m[3][3];
                for (int r = 0; r < 3; ++r) {
                    int cc = 0;
                    for (int c = 0; c < 4; ++c)
                        if (c != j) m[r][cc++] = edges[r][c];
                }
                Int minor = checked_sub(
                    checked_add(checked_mul(m[0][0], checked_sub(checked_mul(m[1][1], m[2][2]),
                                                                 checked_mul(m[1][2], m[2][1]))),
                                checked_mul(m[0][2], checked_sub(checked_mul(m[1][0], m[2][1]),
                                                                 checked_mul(m[1][1], m[2][0])))),
                    checked_mul(m[0][1], checked_sub(checked_mul(m[1][0], m[2][2]),
                                                     checked_mul(m[1][2], m[2][0]))));
                normal[j] = (j % 2 == 0) ? minor : checked_neg(minor);
            }
            Int doubled_offset = 0;  // normal . (2 * vertex_on_facet)
            for (int j = 0; j < 4; ++j)
                doubled_offset = checked_add(doubled_offset, checked_mul(normal[j], pts[0][j]));
            Int at_skipped = 0;
            for (int j = 0; j < 4; ++j)
                at_skipped = checked_add(at_skipped, checked_mul(normal[j], doubled_vertices[skip][j]));
            if (at_skipped > doubled_offset) {
                for (auto& v : normal) v = checked_neg(v);
                doubled_offset = checked_neg(doubled_offset);
                at_skipped = checked_neg(at_skipped);
            }
            if (at_skipped == doubled_offset) throw std::logic_error("degenerate simplex facet");
            facets[skip] = {normal, doubled_offset};
        }
    }
};

// |nQ intersect Z^4| by brute force over the bounding box with exact half-space tests.
inline Int q_simplex_lattice_points(Int n) {
    if (n < 0) throw std::invalid_argument("dilation factor must be nonnegative");
    static const QSimplex q;
    std::array<Int, 4> lo, hi;
    for (int j = 0; j < 4; ++j) {
        Int mn = q.doubled_vertices[0][j], mx = mn;
        for (const auto& v : q.doubled_vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = floor_div(checked_add(checked_mul(n, mn), 1), 2);  // ceil(n*mn/2)
        hi[j] = floor_div(checked_mul(n, mx), 2);
    }
    auto inside = [&](Int x0, Int x1, Int x2, Int x3) {
        for (const auto& f : q.facets) {
            Int dot = checked_mul(f.normal[0], x0);
            dot = checked_add(dot, checked_mul(f.normal[1], x1));
            dot = checked_add(dot, checked_mul(f.normal[2], x2));
            dot = checked_add(dot, checked_mul(f.normal[3], x3));
            // a.x <= n * c/2  <=>  2 a.x <= n * c
            if (checked_mul(2, dot) > checked_mul(n, f.doubled_offset)) return false;
        }
        return true;
    };
    Int count = 0;
    for (Int x0 = lo[0]; x0 <= hi[0]; ++x0)
        for (Int x1 = lo[1]; x1 <= hi[1]; ++x1)
            for (Int x2 = lo[2]; x2 <= hi[2]; ++x2)
                for (Int x3 = lo[3]; x3 <= hi[3]; ++x3)
                    if (inside(x0, x1, x2, x3)) ++count;
    return count;
}

}  // namespace trilab
