#pragma once

#include <vector>

#include "trilab/enumerate.hpp"

namespace trilab {

// Integer sequences read off the classification, indexed from n = 1:
//   with_edge[n-1]                  classes inside [0,n]^2 with an edge of lattice length n
//   with_edge_positive_volume[n-1]  the same, excluding zero-volume classes
//   staircase_diffs[n-1]            first differences of the count of classes with
//                                   second width exactly n+1 and no edge of length n+1
struct EdgeSequences {
    std::vector<Int> with_edge;
    std::vector<Int> with_edge_positive_volume;
    std::vector<Int> staircase_diffs;
};

// Every edge inside [0,n]^2 has lattice length at most n, so only classes with
// second width exactly n can contribute a length-n edge.
inline EdgeSequences edge_sequences(Int nmax) {
    if (nmax < 1) throw std::invalid_argument("edge_sequences requires nmax >= 1");
    EdgeSequences out;
    std::vector<Int> no_edge(static_cast<size_t>(nmax) + 2, 0);  // no_edge[n]: width n, no length-n edge
    for (Int n = 1; n <= nmax + 1; ++n) {
        Int with = 0, with_nonzero = 0, without = 0;
        for (Int w1 = 0; w1 <= n; ++w1) {
            for_each_normal_form(w1, n, [&](const NormalForm& nf) {
                const Triangle& t = nf.triangle;
                bool edge_n = lattice_length(t.v1, t.v2) == n || lattice_length(t.v2, t.v3) == n ||
                              lattice_length(t.v3, t.v1) == n;
                if (edge_n) {
                    ++with;
                    if (w1 > 0) ++with_nonzero;
                } else {
                    ++without;
                }
            });
        }
        no_edge[static_cast<size_t>(n)] = without;
        if (n <= nmax) {
            out.with_edge.push_back(with);
            out.with_edge_positive_volume.push_back(with_nonzero);
        }
    }
    // the n = 1 difference is identically zero (both width-1 classes carry a
    // unit edge), so the reported sequence starts with the n = 2 difference
    for (Int n = 1; n <= nmax; ++n)
        out.staircase_diffs.push_back(no_edge[static_cast<size_t>(n + 1)] - no_edge[static_cast<size_t>(n)]);
    return out;
}

}  // namespace trilab
