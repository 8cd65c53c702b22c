#pragma once

#include <map>
#include <thread>
#include <vector>

#include "trilab/ehrhart.hpp"
#include "trilab/enumerate.hpp"

namespace trilab {

// One (b,i) cell of the dataset, aggregated over every realizing class.
struct BiRecord {
    Int b{0};
    Int i{0};
    Int max_second_width{0};  // largest second width among realizing classes
    bool has_long_edge{false};  // some realizing class has an edge of lattice length equal to its second width
    Int count{0};               // number of realizing classes
    std::set<Int> edge_width_set;  // widths w.r.t. edge normals over all realizing classes
};

namespace detail {

using BiGrid = std::map<std::pair<Int, Int>, BiRecord>;

inline void bi_collect_cell(Int w1, Int w2, Int max_b, Int max_i, BiGrid& grid) {
    for_each_normal_form(w1, w2, [&](const NormalForm& nf) {
        const Triangle& t = nf.triangle;
        Int len1 = lattice_length(t.v1, t.v2);
        Int len2 = lattice_length(t.v2, t.v3);
        Int len3 = lattice_length(t.v3, t.v1);
        Int b = len1 + len2 + len3;
        if (b > max_b) return;
        Int v = normalized_volume(t);
        Int i = (v - b + 2) / 2;
        if (i > max_i) return;
        BiRecord& rec = grid[{b, i}];
        rec.b = b;
        rec.i = i;
        rec.max_second_width = std::max(rec.max_second_width, w2);
        rec.has_long_edge = rec.has_long_edge || len1 == w2 || len2 == w2 || len3 == w2;
        rec.count += 1;
        rec.edge_width_set.insert(v / len1);
        rec.edge_width_set.insert(v / len2);
        rec.edge_width_set.insert(v / len3);
    });
}

inline void bi_merge(BiGrid& into, const BiGrid& from) {
    for (const auto& [key, rec] : from) {
        BiRecord& dst = into[key];
        dst.b = rec.b;
        dst.i = rec.i;
        dst.max_second_width = std::max(dst.max_second_width, rec.max_second_width);
        dst.has_long_edge = dst.has_long_edge || rec.has_long_edge;
        dst.count += rec.count;
        dst.edge_width_set.insert(rec.edge_width_set.begin(), rec.edge_width_set.end());
    }
}

}  // namespace detail

// (b,i) statistics of every nondegenerate class with second width at most
// max_w2, restricted to b <= max_b and i <= max_i. The per-cell aggregation is
// commutative, so the sharded runs merge to the same records in (b,i) order.
inline std::vector<BiRecord> bi_dataset(Int max_b, Int max_i, Int max_w2, int threads = 1) {
    if (max_b < 0 || max_i < 0 || max_w2 < 0) throw std::invalid_argument("bi_dataset limits must be nonnegative");
    detail::BiGrid grid;
    if (threads <= 1) {
        for (Int w2 = 1; w2 <= max_w2; ++w2)
            for (Int w1 = 1; w1 <= w2; ++w1) detail::bi_collect_cell(w1, w2, max_b, max_i, grid);
    } else {
        std::vector<detail::BiGrid> partial(static_cast<size_t>(threads));
        std::vector<std::thread> pool;
        for (int id = 0; id < threads; ++id) {
            pool.emplace_back([&, id] {
                for (Int w2 = 1 + id; w2 <= max_w2; w2 += threads)
                    for (Int w1 = 1; w1 <= w2; ++w1)
                        detail::bi_collect_cell(w1, w2, max_b, max_i, partial[static_cast<size_t>(id)]);
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial) detail::bi_merge(grid, p);
    }
    std::vector<BiRecord> out;
    out.reserve(grid.size());
    for (auto& [key, rec] : grid) out.push_back(std::move(rec));
    return out;  // map iteration is already (b, i) ascending
}

}  // namespace trilab
