#pragma once

#include "common.hpp"

// Plain, no-intersecting, cover and minimal-cover families.
namespace t0enum::catalog {

using exactmath::binom;
using exactmath::factorial;
using exactmath::falling;
using exactmath::lambda;
using exactmath::pow2;
using exactmath::power;
using exactmath::stirling1;
using exactmath::stirling2;

constexpr RowConvention conv1 = RowConvention::ordered_distinct;

// Column j: 0 arbitrary, 1 no empty edges, 2 no full edges, 3 neither.
inline Count alpha(int j, RowConvention c, int m, int n) { return lambda(c, pow2(n) - (j + 1) / 2, m); }

inline Count alpha_star(int j, RowConvention c, int m, int n) {
    return transforms::f0([&](int mm, int i) { return alpha(j, c, mm, i); }, m, n);
}

inline Count bar_alpha_distinct(int i, int m, int n) {
    if (m == 0) return 0;
    if (m == 1) return (i == 0 || i == 2) ? 1 : 0;
    Count r = alpha(i, conv1, m, n);
    for (int j = 1; j <= n - 1; ++j) r += detail::signed_term(j, binom(n, j) * alpha(2 * (i / 2), conv1, m, n - j));
    return r;
}

// No intersecting property.
inline Count bar_alpha(int i, RowConvention c, int m, int n) {
    return transforms::lift_from_distinct([i](int mm, int nn) { return bar_alpha_distinct(i, mm, nn); }, c, m, n);
}

inline Count bar_alpha_star(int i, RowConvention c, int m, int n) {
    return transforms::f0([&](int mm, int nn) { return bar_alpha(i, c, mm, nn); }, m, n);
}

inline Count beta_distinct_singular_free(int i, int m, int n) {
    if (m <= 1) return 0;
    Count r = bar_alpha_distinct(i - 4, m, n);
    for (int j = 1; j <= n - 1; ++j) r += detail::signed_term(j, binom(n, j) * bar_alpha_distinct(i % 2, m, n - j));
    return r;
}

// Covers; i in 4..7 are covers without singular vertices.
inline Count beta(int i, RowConvention c, int m, int n) {
    if (i < 4) {
        Count r = alpha(i, c, m, n);
        for (int j = 1; j <= n; ++j) r += detail::signed_term(j, binom(n, j) * alpha(i & 1, c, m, n - j));
        return r;
    }
    return transforms::lift_from_distinct([i](int mm, int nn) { return beta_distinct_singular_free(i, mm, nn); }, c,
                                          m, n);
}

inline Count beta_star_distinct(int j, int m, int n) {
    if (j == 0 || j == 1) {
        return transforms::cover_shift([j](int mm, int i) { return falling(pow2(i) - j, mm); }, m, n);
    }
    if (m == 0) return 0;
    return beta_star_distinct(j - 2, m, n) - Count(m) * alpha_star(j, conv1, m - 1, n);
}

// T0 covers.
inline Count beta_star(int j, RowConvention c, int m, int n) {
    if (j < 4)
        return transforms::lift_from_distinct([j](int mm, int nn) { return beta_star_distinct(j, mm, nn); }, c, m, n);
    return transforms::f0([&](int mm, int nn) { return beta(j, c, mm, nn); }, m, n);
}

inline Count beta01_printed(int m, int n) { return power(pow2(m) - 1, n); }

inline Count beta41_simple(int m, int n, Reading r) {
    Count total = 0;
    for (int i = 0; i <= n; ++i) {
        Count x = r == Reading::printed ? Count(n - i) : pow2(n - i);
        total += detail::signed_term(i, binom(n, i) * pow2(i) * falling(x, m));
    }
    return total;
}

inline Count mu01(int m, int n) {
    if (m > n) return 0;
    Count r = 0;
    for (int i = m; i <= n; ++i) r += binom(n, i) * stirling2(i, m) * factorial(m) * power(pow2(m) - m - 1, n - i);
    return r;
}

inline Count mu_star01_closed(int m, int n) { return factorial(n) * binom(pow2(m) - m - 1, n - m); }

inline Count mu_star01(int m, int n) { return transforms::f0(mu01, m, n); }

inline Count mu41(int m, int n) {
    if (n < m || m == 1) return 0;
    Count r = 0;
    for (int i = 0; i <= n - 1; ++i) r += detail::signed_term(i, binom(n, i) * mu01(m, n - i));
    return r;
}

inline Count mu_star41(int m, int n) { return transforms::f0(mu41, m, n); }

// Minimal 1-covers; the printed count is the unordered one.
inline Count mu_one_cover(int m, int n, Reading r) {
    return r == Reading::printed ? stirling2(n, m) : factorial(m) * stirling2(n, m);
}

inline Count mu_one_cover_star(int m, int n) { return m == n ? factorial(m) : Count(0); }

}  // namespace t0enum::catalog
