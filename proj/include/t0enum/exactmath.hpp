#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace t0enum {

using Count = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Row convention of a hypergraph family: how the m edges are selected.
enum class RowConvention : int {
    ordered_distinct = 1,
    ordered = 2,
    unordered_distinct = 3,
    unordered = 4,
};

inline int index_of(RowConvention c) { return static_cast<int>(c); }

inline RowConvention convention_from_index(int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("row convention must be in 1..4, got " + std::to_string(i));
    return static_cast<RowConvention>(i);
}

inline bool is_ordered(RowConvention c) {
    return c == RowConvention::ordered_distinct || c == RowConvention::ordered;
}

inline constexpr RowConvention all_conventions[] = {RowConvention::ordered_distinct, RowConvention::ordered,
                                                    RowConvention::unordered_distinct, RowConvention::unordered};

namespace exactmath {

inline Count pow2(int e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return Count(1) << e;
}

inline Count power(const Count& base, int e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline Count factorial(int n) {
    Count r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// [x]_j with polynomial semantics, so negative x is allowed.
inline Count falling(const Count& x, int j) {
    if (j < 0) throw std::invalid_argument("falling: negative length");
    Count r = 1;
    for (int t = 0; t < j; ++t) {
        Count f = x - t;
        if (f == 0) return 0;
        r *= f;
    }
    return r;
}

inline Count binom(const Count& i, long long j) {
    if (j < 0) return 0;
    if (i >= 0 && i < j) return 0;
    return falling(i, static_cast<int>(j)) / factorial(static_cast<int>(j));
}

inline Count binom(long long i, long long j) {
    if (j < 0) return 0;
    if (i >= 0) {
        if (j > i) return 0;
        j = std::min(j, i - j);
        Count r = 1;
        for (long long t = 1; t <= j; ++t) {
            r *= i - j + t;
            r /= t;
        }
        return r;
    }
    return binom(Count(i), j);
}

namespace detail {

// Triangular table filled row by row under a lock; readers copy out values.
class StirlingTable {
public:
    enum class Kind { first, second };
    explicit StirlingTable(Kind kind) : kind_(kind) { rows_.push_back({Count(1)}); }

    Count at(int n, int i) {
        if (n < 0 || i < 0) throw std::invalid_argument("stirling: negative index");
        if (i > n) return 0;
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(rows_.size()) <= n) extend();
        return rows_[n][i];
    }

private:
    void extend() {
        const int n = static_cast<int>(rows_.size());
        const auto& prev = rows_.back();
        std::vector<Count> row(n + 1);
        for (int i = 0; i <= n; ++i) {
            Count left = (i >= 1) ? prev[i - 1] : Count(0);
            Count up = (i <= n - 1) ? prev[i] : Count(0);
            if (kind_ == Kind::first)
                row[i] = left - Count(n - 1) * up;
            else
                row[i] = left + Count(i) * up;
        }
        rows_.push_back(std::move(row));
    }

    Kind kind_;
    std::mutex mutex_;
    std::vector<std::vector<Count>> rows_;
};

inline StirlingTable& first_kind() {
    static StirlingTable t(StirlingTable::Kind::first);
    return t;
}

inline StirlingTable& second_kind() {
    static StirlingTable t(StirlingTable::Kind::second);
    return t;
}

}  // namespace detail

// Signed Stirling numbers of the first kind: [x]_n = sum_i s(n,i) x^i.
inline Count stirling1(int n, int i) { return detail::first_kind().at(n, i); }

inline Count stirling2(int n, int i) { return detail::second_kind().at(n, i); }

// Block-size multiplicities of a set partition; alphas[i-1] counts blocks of size i.
struct PartitionType {
    std::vector<int> alphas;

    int n() const { return static_cast<int>(alphas.size()); }

    int sigma() const {
        int s = 0;
        for (int i = 0; i < n(); ++i) s += (i + 1) * alphas[i];
        return s;
    }

    int blocks() const {
        int s = 0;
        for (int a : alphas) s += a;
        return s;
    }

    int operator[](int size) const { return alphas.at(size - 1); }

    friend bool operator==(const PartitionType&, const PartitionType&) = default;
    friend auto operator<=>(const PartitionType& a, const PartitionType& b) { return a.alphas <=> b.alphas; }
};

namespace detail {

inline void fill_types(int size, int remaining, std::vector<int>& alphas, std::vector<PartitionType>& out) {
    if (size == 0) {
        if (remaining == 0) out.push_back(PartitionType{alphas});
        return;
    }
    for (int a = remaining / size; a >= 0; --a) {
        alphas[size - 1] = a;
        fill_types(size - 1, remaining - a * size, alphas, out);
    }
    alphas[size - 1] = 0;
}

}  // namespace detail

// Every type of an n-set partition, lexicographic on (alpha_1, ..., alpha_n).
inline std::vector<PartitionType> partition_types(int n) {
    if (n < 1) throw std::invalid_argument("partition_types: n must be >= 1");
    std::vector<PartitionType> out;
    std::vector<int> alphas(n, 0);
    detail::fill_types(n, n, alphas, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Number of set partitions of an n-set with type tau.
inline Count b_tau(const PartitionType& tau) {
    Count den = 1;
    for (int i = 1; i <= tau.n(); ++i) den *= factorial(tau[i]) * power(factorial(i), tau[i]);
    return factorial(tau.sigma()) / den;
}

// Number of permutations with cycle type tau.
inline Count c_tau(const PartitionType& tau) {
    Count den = 1;
    for (int i = 1; i <= tau.n(); ++i) den *= factorial(tau[i]) * power(Count(i), tau[i]);
    return factorial(tau.sigma()) / den;
}

namespace detail {

// Coefficients of prod_i (1 + z^i)^{alpha_i}: entry s counts block unions of size s.
inline std::vector<Count> block_union_sizes(const PartitionType& alpha) {
    const int n = alpha.sigma();
    std::vector<Count> poly(n + 1, 0);
    poly[0] = 1;
    for (int i = 1; i <= alpha.n(); ++i) {
        for (int rep = 0; rep < alpha[i]; ++rep) {
            for (int s = n; s >= i; --s) poly[s] += poly[s - i];
        }
    }
    return poly;
}

}  // namespace detail

// Number of k-subsets that are unions of blocks of a partition of type alpha.
inline Count nu(const PartitionType& alpha, int k) {
    if (k < 0) return 0;
    auto poly = detail::block_union_sizes(alpha);
    return k < static_cast<int>(poly.size()) ? poly[k] : Count(0);
}

// Number of non-empty block unions with at most k elements.
inline Count nu_le(const PartitionType& alpha, int k) {
    auto poly = detail::block_union_sizes(alpha);
    Count r = 0;
    for (int s = 1; s <= k && s < static_cast<int>(poly.size()); ++s) r += poly[s];
    return r;
}

// Ways to select j edges from i candidates under a row convention.
inline Count lambda(RowConvention mode, const Count& i, int j) {
    if (j < 0) throw std::invalid_argument("lambda: negative selection size");
    switch (mode) {
        case RowConvention::ordered_distinct:
            return falling(i, j);
        case RowConvention::ordered:
            return power(i, j);
        case RowConvention::unordered_distinct:
            return binom(i, j);
        case RowConvention::unordered:
            if (j == 0) return 1;
            return binom(Count(i + j - 1), j);
    }
    throw std::invalid_argument("lambda: bad mode");
}

inline Count lambda(int mode, const Count& i, int j) { return lambda(convention_from_index(mode), i, j); }

}  // namespace exactmath
}  // namespace t0enum
