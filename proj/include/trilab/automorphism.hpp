#pragma once

#include "trilab/normal_form.hpp"

namespace trilab {

enum class AutTag { Trivial, C2, C3, S3 };

inline const char* aut_name(AutTag t) {
    switch (t) {
        case AutTag::Trivial: return "trivial";
        case AutTag::C2: return "C2";
        case AutTag::C3: return "C3";
        case AutTag::S3: return "S3";
    }
    return "?";
}

// Subgroup of the vertex permutations realized by affine unimodular maps.
// Permutation indices follow detail::kPermutations: id, (12), (13), (23), (123), (132).
struct AutClass {
    AutTag tag{AutTag::Trivial};
    std::array<bool, 6> realized{true, false, false, false, false, false};

    int order() const {
        int n = 0;
        for (bool r : realized) n += r ? 1 : 0;
        return n;
    }
};

inline bool operator==(const AutClass& a, const AutClass& b) {
    return a.tag == b.tag && a.realized == b.realized;
}

namespace detail {

inline AutTag tag_for(const std::array<bool, 6>& realized) {
    int order = 0;
    for (bool r : realized) order += r ? 1 : 0;
    switch (order) {
        case 1: return AutTag::Trivial;
        case 2: return AutTag::C2;
        case 3: return AutTag::C3;
        case 6: return AutTag::S3;
    }
    throw std::logic_error("realized permutations do not form a subgroup of S3");
}

inline std::array<bool, 6> realized_permutations(const Triangle& t) {
    Mat3 a = vertex_matrix(t);
    Int det_a = det3(a);
    Mat3 adj_a = adjugate(a);
    std::array<bool, 6> realized{};
    for (int p = 0; p < 6; ++p)
        realized[p] = permuted_quotient(permute_columns(a, kPermutations[p]), adj_a, det_a).has_value();
    return realized;
}

}  // namespace detail

// Matrix test: permutation sigma is an automorphism exactly when the permuted
// vertex matrix divided by the original one is integral and unimodular.
inline AutClass automorphism_group(const Triangle& t) {
    if (is_degenerate(t)) throw std::invalid_argument("automorphism group requires a nondegenerate triangle");
    AutClass out;
    out.realized = detail::realized_permutations(t);
    out.tag = detail::tag_for(out.realized);
    if (out.tag == AutTag::C3 && !(out.realized[4] && out.realized[5]))
        throw std::logic_error("order-3 subgroup must consist of the two 3-cycles");
    return out;
}

// Closed-form classification of a normal form's automorphism group:
//   S3: w1 == w2 and T((0,0),(w1,0),(0,w1)), or T((0,0),(w1,w1/2),(w1/2,w1))
//   C3: w1 == w2 and T((0,0),(w1,y1),(w1-y1,w1)) with y1 != w1/2
//   C2: T((0,0),(w1,y1),(0,w2)) with 2*y1 = w2 (mod w1) and (y1 > 0 or w1 < w2);
//       T((0,0),(w1,0),(w1/2,w2));
//       T((0,0),(w1,w1/2),(w1/2,w2)) with w1 < w2;
//       T((0,0),(w1,y1),(y1,w1)) with w1 == w2 and 2*y1 < w1
//   trivial otherwise.
inline AutClass classify_automorphisms(const NormalForm& nf) {
    if (nf.family == Family::Segment)
        throw std::invalid_argument("automorphism classification requires w1 > 0");

    auto with = [](AutTag tag, std::initializer_list<int> perms) {
        AutClass c;
        c.tag = tag;
        for (int p : perms) c.realized[p] = true;
        return c;
    };

    const bool square = nf.w1 == nf.w2;
    if (nf.family == Family::LongEdge) {
        if (square && nf.y1 == 0) return with(AutTag::S3, {1, 2, 3, 4, 5});
        if (mod_nonneg(2 * nf.y1 - nf.w2, nf.w1) == 0 && (nf.y1 > 0 || nf.w1 < nf.w2))
            return with(AutTag::C2, {2});  // swaps the endpoints of the long edge
        return with(AutTag::Trivial, {});
    }
    if (nf.family == Family::ShortEdge1) {
        bool x2_half = 2 * nf.x2 == nf.w1;
        bool y1_half = 2 * nf.y1 == nf.w1;
        if (square && x2_half && y1_half) return with(AutTag::S3, {1, 2, 3, 4, 5});
        if (square && nf.x2 == nf.w1 - nf.y1 && !y1_half) return with(AutTag::C3, {4, 5});
        if (x2_half && nf.y1 == 0) return with(AutTag::C2, {1});
        if (x2_half && y1_half && nf.w1 < nf.w2) return with(AutTag::C2, {1});
        if (square && nf.x2 == nf.y1 && 2 * nf.y1 < nf.w1) return with(AutTag::C2, {3});
        return with(AutTag::Trivial, {});
    }
    return with(AutTag::Trivial, {});  // ShortEdge2 triangles have no symmetries
}

}  // namespace trilab
