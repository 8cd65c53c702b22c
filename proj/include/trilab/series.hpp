#pragma once

#include <vector>

#include "trilab/checked.hpp"

namespace trilab {

// Bivariate power series coefficients truncated at a total degree; index [t_deg][s_deg].
struct SeriesCoeffs {
    Int max_total_degree{0};
    std::vector<std::vector<Int>> c;

    Int at(Int t_deg, Int s_deg) const {
        if (t_deg < 0 || s_deg < 0 || t_deg + s_deg > max_total_degree)
            throw std::out_of_range("series coefficient outside the truncation order");
        return c[static_cast<size_t>(t_deg)][static_cast<size_t>(s_deg)];
    }
};

namespace detail {

using Bivariate = std::vector<std::vector<Int>>;  // [t_deg][s_deg], total degree truncated

inline Bivariate bivariate_zero(Int max_deg) {
    Bivariate p(static_cast<size_t>(max_deg) + 1);
    for (Int i = 0; i <= max_deg; ++i) p[static_cast<size_t>(i)].assign(static_cast<size_t>(max_deg - i) + 1, 0);
    return p;
}

inline Bivariate bivariate_mul(const Bivariate& a, const Bivariate& b, Int max_deg) {
    Bivariate r = bivariate_zero(max_deg);
    for (Int i = 0; i <= max_deg; ++i)
        for (Int j = 0; i + j <= max_deg; ++j) {
            Int av = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (av == 0) continue;
            for (Int k = 0; i + k <= max_deg; ++k)
                for (Int l = 0; i + j + k + l <= max_deg; ++l) {
                    Int bv = b[static_cast<size_t>(k)][static_cast<size_t>(l)];
                    if (bv == 0) continue;
                    auto& slot = r[static_cast<size_t>(i + k)][static_cast<size_t>(j + l)];
                    slot = checked_add(slot, checked_mul(av, bv));
                }
        }
    return r;
}

// 1 / (1 - sign * t^dt * s^ds) as a truncated geometric series.
inline Bivariate geometric(Int dt, Int ds, Int sign, Int max_deg) {
    Bivariate r = bivariate_zero(max_deg);
    Int coeff = 1;
    for (Int k = 0; k * (dt + ds) <= max_deg; ++k) {
        r[static_cast<size_t>(k * dt)][static_cast<size_t>(k * ds)] = coeff;
        coeff = checked_mul(coeff, sign);
    }
    return r;
}

}  // namespace detail

// Expansion of the class-count generating function
//   (1 - st + s^2 t^2 - s^3 t + s^4 t^3 - s^5 t^2 + s^6 t^3 - s^7 t^4)
//     / ((1-s)^2 (1+s) (1-st)^3 (1+st))
// up to the given total degree; the t^w1 s^w2 coefficient is the class count.
inline SeriesCoeffs class_count_series(Int max_deg) {
    if (max_deg < 0) throw std::invalid_argument("truncation order must be nonnegative");
    detail::Bivariate acc = detail::bivariate_zero(max_deg);
    const struct {
        Int t, s, v;
    } numerator[] = {{0, 0, 1}, {1, 1, -1}, {2, 2, 1}, {1, 3, -1},
                     {3, 4, 1}, {2, 5, -1}, {3, 6, 1}, {4, 7, -1}};
    for (const auto& term : numerator)
        if (term.t + term.s <= max_deg)
            acc[static_cast<size_t>(term.t)][static_cast<size_t>(term.s)] = term.v;
    acc = detail::bivariate_mul(acc, detail::geometric(0, 1, 1, max_deg), max_deg);
    acc = detail::bivariate_mul(acc, detail::geometric(0, 1, 1, max_deg), max_deg);
    acc = detail::bivariate_mul(acc, detail::geometric(0, 1, -1, max_deg), max_deg);
    acc = detail::bivariate_mul(acc, detail::geometric(1, 1, 1, max_deg), max_deg);
    acc = detail::bivariate_mul(acc, detail::geometric(1, 1, 1, max_deg), max_deg);
    acc = detail::bivariate_mul(acc, detail::geometric(1, 1, 1, max_deg), max_deg);
    acc = detail::bivariate_mul(acc, detail::geometric(1, 1, -1, max_deg), max_deg);
    return SeriesCoeffs{max_deg, std::move(acc)};
}

// Coefficients of (1 - t^8) / ((1-t^2)^3 (1-t)^3): entry n counts the classes
// inside [0,n]^2, matching square_class_count and q_simplex_lattice_points.
inline std::vector<Int> square_count_series(Int nmax) {
    if (nmax < 0) throw std::invalid_argument("truncation order must be nonnegative");
    // denominator (1-t^2)^3 (1-t)^3 expanded by repeated multiplication
    std::vector<Int> den{1};
    auto mul_by = [&](const std::vector<Int>& f) {
        std::vector<Int> r(den.size() + f.size() - 1, 0);
        for (size_t i = 0; i < den.size(); ++i)
            for (size_t j = 0; j < f.size(); ++j)
                r[i + j] = checked_add(r[i + j], checked_mul(den[i], f[j]));
        den = std::move(r);
    };
    for (int k = 0; k < 3; ++k) mul_by({1, 0, -1});
    for (int k = 0; k < 3; ++k) mul_by({1, -1});

    std::vector<Int> out(static_cast<size_t>(nmax) + 1, 0);
    for (Int n = 0; n <= nmax; ++n) {
        Int num = (n == 0) ? 1 : (n == 8 ? -1 : 0);
        Int acc = num;
        for (Int k = 1; k <= n && k < static_cast<Int>(den.size()); ++k)
            acc = checked_sub(acc, checked_mul(den[static_cast<size_t>(k)], out[static_cast<size_t>(n - k)]));
        out[static_cast<size_t>(n)] = acc;  // den[0] == 1
    }
    return out;
}

}  // namespace trilab
