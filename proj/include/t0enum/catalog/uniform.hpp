#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "covers.hpp"

// k-uniform and k-bounded families, their T0 variants, and the 2-cover example.
namespace t0enum::catalog {

using exactmath::PartitionType;

// Sum of C(t, i) for 1 <= i <= s.
inline Count binom_bar(int t, int s) {
    Count r = 0;
    for (int i = 1; i <= s; ++i) r += binom(t, i);
    return r;
}

// theta: k-uniform; theta_bar: at most k vertices per edge and no empty edges.
enum class Shape { uniform, bounded };

inline Count theta_distinct(Shape shape, int idx, int m, int n, int k, Reading r = Reading::corrected);

namespace detail {

inline Count edge_slots(Shape shape, int n, int k) { return shape == Shape::uniform ? binom(n, k) : binom_bar(n, k); }

// Bounded edges where the empty edge is also allowed.
inline Count theta_prime_distinct(int j, int m, int n, int k, Reading r) {
    const bool printed = r == Reading::printed;
    auto slots = [&](int t) { return printed ? binom(t, k) : binom_bar(t, k); };
    if (j == 0) return falling(slots(n) + 1, m);
    Count total = 0;
    for (int i = 0; i <= (printed ? n - k : n - 1); ++i)
        total += signed_term(i, binom(n, i) * falling(slots(n - i) + 1, m));
    return total;
}

}  // namespace detail

// Conv-1 counts; idx 0 plain, 1 cover, 3 plain without intersecting, 4 cover without intersecting.
inline Count theta_distinct(Shape shape, int idx, int m, int n, int k, Reading r) {
    if (n < 0 || k < 0) return 0;
    switch (idx) {
        case 0:
            return falling(detail::edge_slots(shape, n, k), m);
        case 1: {
            const int top = shape == Shape::uniform ? n - k : n - 1;
            Count total = 0;
            for (int i = 0; i <= top; ++i)
                total += detail::signed_term(i, binom(n, i) * falling(detail::edge_slots(shape, n - i, k), m));
            return total;
        }
        case 3:
        case 4: {
            if (m <= 1) return 0;
            const int j = idx - 3;
            if (shape == Shape::uniform) {
                Count total = 0;
                for (int i = 0; i <= k - 1; ++i)
                    total += detail::signed_term(i, binom(n, i) * theta_distinct(shape, j, m, n - i, k - i, r));
                return total;
            }
            Count total = theta_distinct(shape, j, m, n, k, r);
            for (int i = 1; i <= k - 1; ++i)
                total += detail::signed_term(i, binom(n, i) * detail::theta_prime_distinct(j, m, n - i, k - i, r));
            return total;
        }
        default:
            throw std::invalid_argument("theta: unsupported index " + std::to_string(idx));
    }
}

inline Count theta(Shape shape, int idx, RowConvention c, int m, int n, int k, Reading r = Reading::corrected) {
    return transforms::lift_from_distinct(
        [&](int mm, int nn) { return theta_distinct(shape, idx, mm, nn, k, r); }, c, m, n);
}

// T0 counts of k-uniform (or k-bounded, no empty edge) hypergraphs by partition types.
inline Count theta_star_partition(RowConvention s, int m, int n, int k, bool bounded) {
    if (n == 0) return lambda(s, Count(!bounded && k == 0 ? 1 : 0), m);
    return transforms::theorem2_uniform(
        [&](const PartitionType& tau) {
            return lambda(s, bounded ? exactmath::nu_le(tau, k) : exactmath::nu(tau, k), m);
        },
        n);
}

namespace detail {

using StarKey = std::tuple<int, int, int, int, int, int, int>;

inline Memo<StarKey>& star_memo() {
    static Memo<StarKey> memo;
    return memo;
}

// T0, at most k vertices per edge, empty edges allowed.
inline Count e0_star(RowConvention s, int m, int n, int k) {
    if (n == 0) return lambda(s, Count(1), m);
    if (k <= 0) return n <= 1 ? lambda(s, Count(1), m) : Count(0);
    return transforms::theorem2_uniform(
        [&](const PartitionType& tau) { return lambda(s, exactmath::nu_le(tau, k) + 1, m); }, n);
}

// As e0_star, and without the intersecting property.
inline Count e3_star(RowConvention s, int m, int n, int k) {
    if (n == 0) return lambda(s, Count(1), m);
    if (k <= 0) return n <= 1 ? lambda(s, Count(1), m) : Count(0);
    return star_memo().get({9, index_of(s), m, n, k, 1, 0},
                           [&] { return e0_star(s, m, n, k) - Count(n) * e3_star(s, m, n - 1, k - 1); });
}

}  // namespace detail

// T0 variants; idx 0 plain, 1 cover, 3 without intersecting, 4 cover without intersecting.
inline Count theta_star(Shape shape, int idx, RowConvention s, int m, int n, int k, Reading r = Reading::corrected) {
    const bool bounded = shape == Shape::bounded;
    if (idx == 0) {
        if (!bounded && k <= 0) return n <= 1 ? lambda(s, Count(1), m) : Count(0);
        return theta_star_partition(s, m, n, k, bounded);
    }
    if (idx == 1 || idx == 4) {
        if (n == 0) return m == 0 ? 1 : 0;
    }
    const detail::StarKey key{static_cast<int>(shape), idx, index_of(s), m, n, k, detail::reading_index(r)};
    return detail::star_memo().get(key, [&]() -> Count {
        const bool printed = r == Reading::printed;
        switch (idx) {
            case 1: {
                RowConvention inner = printed ? conv1 : s;
                return theta_star(shape, 0, s, m, n, k, r) - Count(n) * theta_star(shape, 1, inner, m, n - 1, k, r);
            }
            case 3: {
                if (m == 0) return 0;
                if (bounded && k <= 0) return 0;
                if (!bounded && k <= 0) return n <= 1 ? lambda(s, Count(1), m) : Count(0);
                if (n == 0) return 0;
                if (printed) {
                    return theta_star(shape, 0, s, m, n, k, r) - Count(n) * theta_star(shape, 3, s, m, n - 1, k, r);
                }
                if (bounded) {
                    return theta_star(shape, 0, s, m, n, k, r) - Count(n) * detail::e3_star(s, m, n - 1, k - 1);
                }
                return theta_star(shape, 0, s, m, n, k, r) - Count(n) * theta_star(shape, 3, s, m, n - 1, k - 1, r);
            }
            case 4: {
                if (printed) {
                    // The printed recurrence subtracts the cover count of convention 4 with index 1.
                    return theta_star(shape, 3, s, m, n, k, r) -
                           Count(n) * theta_star(shape, 1, RowConvention::unordered, m, n - 1, k, r);
                }
                return theta_star(shape, 3, s, m, n, k, r) - Count(n) * theta_star(shape, 4, s, m, n - 1, k, r);
            }
            default:
                throw std::invalid_argument("theta_star: unsupported index " + std::to_string(idx));
        }
    });
}

namespace detail {

using WKey = std::tuple<int, int, std::vector<int>>;

inline Memo<WKey>& w_memo() {
    static Memo<WKey> memo;
    return memo;
}

// Ordered rows with prescribed sizes (exact, or upper bounds with empty allowed)
// over n vertices whose columns are pairwise distinct.
inline Count distinct_columns(int n, const std::vector<int>& sizes, bool bounded) {
    for (int s : sizes)
        if (s < 0) return 0;
    if (n == 0) {
        if (bounded) return 1;
        return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; }) ? 1 : 0;
    }
    return transforms::theorem2_uniform(
        [&](const PartitionType& tau) {
            Count p = 1;
            for (int s : sizes) p *= bounded ? exactmath::nu_le(tau, s) + 1 : exactmath::nu(tau, s);
            return p;
        },
        n);
}

// As distinct_columns, and every column has weight at least 2.
inline Count heavy_columns(int n, std::vector<int> sizes, bool bounded) {
    for (int s : sizes)
        if (s < 0) return 0;
    std::sort(sizes.begin(), sizes.end());
    if (n == 0) return distinct_columns(0, sizes, bounded);
    return w_memo().get({bounded ? 1 : 0, n, sizes}, [&]() -> Count {
        Count total = distinct_columns(n, sizes, bounded);
        const int rows = static_cast<int>(sizes.size());
        // Light column patterns: bit 0 the zero column, bit r+1 the unit column of row r.
        for (unsigned mask = 1; mask < (1U << (rows + 1)); ++mask) {
            const int used = std::popcount(mask);
            if (used > n) continue;
            std::vector<int> rest = sizes;
            for (int r = 0; r < rows; ++r)
                if (mask & (1U << (r + 1))) --rest[r];
            total -= falling(Count(n), used) * heavy_columns(n - used, rest, bounded);
        }
        return total;
    });
}

// As heavy_columns, and no all-one column.
inline Count heavy_columns_no_full(int n, std::vector<int> sizes, bool bounded) {
    for (int s : sizes)
        if (s < 0) return 0;
    if (n == 0) return heavy_columns(0, sizes, bounded);
    std::sort(sizes.begin(), sizes.end());
    return w_memo().get({bounded ? 3 : 2, n, sizes}, [&]() -> Count {
        std::vector<int> less = sizes;
        for (int& s : less) --s;
        return heavy_columns(n, sizes, bounded) - Count(n) * heavy_columns_no_full(n - 1, less, bounded);
    });
}

}  // namespace detail

// T0 minimal covers; idx 2 k-uniform (or bounded), idx 5 also without intersecting.
inline Count theta_star_minimal(Shape shape, int idx, int m, int n, int k, Reading r) {
    if (m > n || m < 1) return 0;
    const bool bounded = shape == Shape::bounded;
    if (r == Reading::printed) {
        const int inner = idx == 2 ? 1 : 4;
        if (!bounded) return falling(Count(n), m) * theta_star(shape, inner, RowConvention::ordered, m, n - m, k - 1, r);
        Count sum = 0;
        for (int j = 1; j <= m; ++j)
            sum += binom(m, j) * theta_star(shape, inner, RowConvention::ordered, j, n - m, k - 1, r);
        return falling(Count(n), m) * sum;
    }
    if (idx == 5 && m == 1) return 0;
    std::vector<int> sizes(m, k - 1);
    Count rest = idx == 2 ? detail::heavy_columns(n - m, sizes, bounded)
                          : detail::heavy_columns_no_full(n - m, sizes, bounded);
    return falling(Count(n), m) * rest;
}

// Graphs without components made of one non-loop edge (loops allowed when with_loops).
inline Count theta_circ_03(int m, int n, bool with_loops) {
    Count r = 0;
    for (int k = 0; k <= std::min(n / 2, m); ++k) {
        Count pairs = falling(Count(n), 2 * k) / (pow2(k) * factorial(k));
        Count slots = binom(n - 2 * k, 2) + (with_loops ? Count(n - 2 * k) : Count(0));
        r += detail::signed_term(k, pairs * binom(slots, m - k));
    }
    return r;
}

inline Count theta_circ_13(int m, int n, bool with_loops) {
    Count r = 0;
    for (int i = 0; i <= n; ++i) r += detail::signed_term(i, binom(n, i) * theta_circ_03(m, n - i, with_loops));
    return r;
}

// Unordered T0 2-covers (or covers with degrees at most 2) without empty edges.
inline Count beta_two_cover_star(int m, int n, bool bounded) {
    Count num = factorial(n) * theta_circ_13(n, m, bounded);
    return transforms::g2(num, m, transforms::Direction::to_unordered);
}

}  // namespace t0enum::catalog
