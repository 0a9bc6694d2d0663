#pragma once

#include <tuple>

#include "uniform.hpp"

// Connected families.
namespace t0enum::catalog {

// Weight for choosing the i edges of the component: C(m,i) when ordered, else 1.
inline Count nu_weight(int mode, int m, int i) { return (mode == 1 || mode == 2) ? binom(m, i) : Count(1); }

namespace detail {

using OmegaKey = std::tuple<int, int, int, int, int, int>;

inline Memo<OmegaKey>& omega_memo() {
    static Memo<OmegaKey> memo;
    return memo;
}

}  // namespace detail

// Connected, no empty edges.
inline Count omega1(RowConvention c, int m, int n) {
    if (m == 0) return n == 1 ? 1 : 0;
    return detail::omega_memo().get({1, index_of(c), m, n, 0, 0}, [&] {
        Count r = lambda(c, pow2(n) - 1, m);
        for (int i = 0; i <= m; ++i)
            for (int j = 1; j <= n - 1; ++j)
                r -= nu_weight(index_of(c), m, i) * binom(n - 1, j - 1) * lambda(c, pow2(n - j) - 1, m - i) *
                     omega1(c, i, j);
        return r;
    });
}

inline Count omega(int i, RowConvention c, int m, int n, Reading r = Reading::corrected);

namespace detail {

inline Count omega0(RowConvention c, int m, int n, Reading r) {
    if (m == 0) return n == 1 ? 1 : 0;
    const bool printed = r == Reading::printed;
    if (printed && m == 1) return n == 1 ? 2 : 1;
    switch (c) {
        case RowConvention::ordered_distinct:
            return Count(m) * omega1(c, m - 1, n) + omega1(c, m, n);
        case RowConvention::unordered_distinct:
            return omega1(c, m - 1, n) + omega1(c, m, n);
        case RowConvention::ordered:
        case RowConvention::unordered: {
            Count total = 0;
            for (int i = 0; i <= (printed ? m - 1 : m); ++i)
                total += (c == RowConvention::ordered ? binom(m, i) : Count(1)) * omega1(c, m - i, n);
            return total;
        }
    }
    return 0;
}

// Subtracts the hypergraphs that contain a full edge.
inline Count omega_without_full(int j, RowConvention c, int m, int n, Reading r) {
    Count base = omega(j - 2, c, m, n, r);
    if (m == 0) return base;
    switch (c) {
        case RowConvention::ordered_distinct:
            return base - Count(m) * alpha(j, c, m - 1, n);
        case RowConvention::unordered_distinct:
            return base - alpha(j, c, m - 1, n);
        case RowConvention::ordered:
        case RowConvention::unordered: {
            for (int i = 1; i <= m; ++i)
                base -= (c == RowConvention::ordered ? binom(m, i) : Count(1)) * alpha(j, c, m - i, n);
            return base;
        }
    }
    return base;
}

inline Count cover_boundary(int j, RowConvention c, int m, int n, Reading r) {
    if (n > 0) return beta(j, c, m, n);
    if (r == Reading::printed) return (c == RowConvention::ordered || c == RowConvention::unordered) ? 1 : 0;
    return j == 0 ? lambda(c, Count(1), m) : Count(0);
}

// Subtracts the intersecting ones, which are exactly the intersecting covers.
inline Count omega_not_intersecting(int j, RowConvention c, int m, int n, Reading r) {
    const int cover_index = j < 6 ? 0 : 2;
    Count sieve = 0;
    for (int i = 1; i <= n; ++i)
        sieve += signed_term(i, binom(n, i) * cover_boundary(cover_index, c, m, n - i, r));
    Count base = omega(j - 4, c, m, n, r);
    return r == Reading::printed ? base - sieve : base + sieve;
}

}  // namespace detail

// Column i: 0 connected, 1 no empty edges, 2 no full edges, 3 neither; i + 4 adds no intersecting.
inline Count omega(int i, RowConvention c, int m, int n, Reading r) {
    switch (i) {
        case 0:
            return detail::omega0(c, m, n, r);
        case 1:
            return omega1(c, m, n);
        case 2:
        case 3:
            return detail::omega_without_full(i, c, m, n, r);
        case 4:
        case 5:
        case 6:
        case 7:
            return detail::omega_not_intersecting(i, c, m, n, r);
        default:
            throw std::invalid_argument("omega: column out of range");
    }
}

// With empty edges allowed, a matrix of empty rows on n >= 2 vertices is disconnected
// but collapses to one connected vertex, so the corrected reading filters it back in.
inline Count omega_star(int i, RowConvention c, int m, int n, Reading r = Reading::corrected) {
    const bool collapse = r == Reading::corrected && i % 2 == 0;
    return transforms::f0(
        [&](int mm, int nn) {
            Count v = omega(i, c, mm, nn, r);
            if (collapse && nn >= 2) v += lambda(c, Count(1), mm);
            return v;
        },
        m, n);
}

// T0 connected k-uniform (uniform) or k-bounded without empty edges (bounded).
inline Count omega_uniform_star(Shape shape, RowConvention s, int m, int n, int k, Reading r = Reading::corrected) {
    const int si = index_of(s);
    const bool bounded = shape == Shape::bounded;
    if (n == 1) {
        bool edge_fits = bounded || k == 1;
        return (edge_fits && ((m == 1 && (si == 1 || si == 3)) || (m >= 1 && (si == 2 || si == 4)))) ? 1 : 0;
    }
    if (m < 1) return 0;
    const bool printed = r == Reading::printed;
    return detail::omega_memo().get({bounded ? 3 : 2, si, m, n, k, detail::reading_index(r)}, [&] {
        auto remainder = [&](int a, int b) -> Count {
            if (printed && bounded) return theta_star(shape, 1, s, a, b, k, r);
            if (a == 0) return (printed || b == 1) ? 1 : 0;
            return theta_star(shape, 0, s, a, b, k, r);
        };
        const int nu_mode = printed ? k : si;
        Count total = theta_star(shape, 0, s, m, n, k, r) - theta_star(shape, 1, s, m, n - 1, k, r);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n - 1; ++j)
                total -= nu_weight(nu_mode, m, i) * binom(n - 1, j - 1) * remainder(m - i, n - j) *
                         omega_uniform_star(shape, s, i, j, k, r);
        return total;
    });
}

}  // namespace t0enum::catalog
