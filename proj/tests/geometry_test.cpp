#include <doctest.h>

#include "oracles.hpp"
#include "trilab/trilab.hpp"

using namespace trilab;

namespace {
const Triangle kUnit{{0, 0}, {1, 0}, {0, 1}};
}

TEST_CASE("width along a dual vector") {
    CHECK(width_along(Triangle{{0, 0}, {3, 0}, {0, 4}}, {1, 0}) == 3);
    CHECK(width_along(Triangle{{0, 0}, {2, 1}, {1, 2}}, {1, 1}) == 3);
    CHECK(width_along(kUnit, {0, 1}) == 1);
}

TEST_CASE("width equals the largest pairwise difference") {
    for (int n = 0; n < 200; ++n) {
        Triangle t = oracles::random_triangle(-9, 9);
        Int a = oracles::random_int(-6, 6), b = oracles::random_int(-6, 6);
        if (a == 0 && b == 0) continue;
        DualVector u{a, b};
        Int expected = std::max({checked_abs(dot(u, t.v1 - t.v2)), checked_abs(dot(u, t.v2 - t.v3)),
                                 checked_abs(dot(u, t.v3 - t.v1))});
        CHECK(width_along(t, u) == expected);
    }
}

TEST_CASE("normalized volume") {
    CHECK(normalized_volume(kUnit) == 1);
    CHECK(normalized_volume(Triangle{{0, 0}, {3, 0}, {0, 4}}) == 12);
    CHECK(normalized_volume(Triangle{{0, 0}, {2, 4}, {1, 2}}) == 0);
    CHECK(is_degenerate(Triangle{{0, 0}, {2, 4}, {1, 2}}));
    CHECK_FALSE(is_degenerate(kUnit));
}

TEST_CASE("applying affine unimodular maps") {
    CHECK(apply(identity_map(), kUnit) == kUnit);
    CHECK(apply(translation(5, 5), kUnit) == Triangle{{5, 5}, {6, 5}, {5, 6}});
    UnimodularMap swap{0, 1, 1, 0, 0, 0};
    CHECK(apply(swap, Triangle{{0, 0}, {1, 2}, {3, 1}}) == Triangle{{0, 0}, {2, 1}, {1, 3}});

    UnimodularMap bad{2, 0, 0, 1, 0, 0};
    CHECK_THROWS_AS(apply(bad, kUnit), std::invalid_argument);
}

TEST_CASE("compose and inverse round-trip") {
    for (int n = 0; n < 100; ++n) {
        UnimodularMap m = oracles::random_unimodular(10);
        Triangle t = oracles::random_triangle(-8, 8);
        CHECK(apply(inverse(m), apply(m, t)) == t);
        UnimodularMap m2 = oracles::random_unimodular(10);
        CHECK(apply(compose(m2, m), t) == apply(m2, apply(m, t)));
    }
}

TEST_CASE("functional transport matches mapped widths") {
    for (int n = 0; n < 100; ++n) {
        UnimodularMap m = oracles::random_unimodular(10);
        Triangle t = oracles::random_triangle(-8, 8);
        DualVector u{oracles::random_int(-5, 5), oracles::random_int(-5, 5)};
        if (u.a == 0 && u.b == 0) continue;
        CHECK(width_along(apply(m, t), u) == width_along(t, transport(u, m)));
    }
}

TEST_CASE("arithmetic overflow is a hard error") {
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_neg(INT64_MIN), std::overflow_error);
    CHECK_THROWS_AS(width_along(Triangle{{0, 0}, {INT64_MAX, 0}, {0, 1}}, {2, 1}), std::overflow_error);
}

TEST_CASE("unimodular completion of a primitive row") {
    for (Int a = -7; a <= 7; ++a) {
        for (Int b = -7; b <= 7; ++b) {
            if (!is_primitive({a, b})) continue;
            UnimodularMap m = complete_to_unimodular({a, b});
            CHECK(m.m11 == a);
            CHECK(m.m12 == b);
            CHECK(m.det() == 1);
        }
    }
}
