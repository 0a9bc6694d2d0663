#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exactmath.hpp"

namespace t0enum::transforms {

using exactmath::binom;
using exactmath::factorial;
using exactmath::stirling1;
using exactmath::stirling2;

// A count table addressed as (m, n).
using TableFn = std::function<Count(int m, int n)>;

struct Cell {
    int m = 0;
    int n = 0;
    std::optional<int> k;
    friend auto operator<=>(const Cell&, const Cell&) = default;
    friend bool operator==(const Cell&, const Cell&) = default;
};

struct CountTable {
    std::string class_id;
    std::string provenance;  // "formula", "oracle" or "transform(<ids>)"
    std::map<Cell, Count> entries;

    bool has(int m, int n, std::optional<int> k = std::nullopt) const { return entries.count(Cell{m, n, k}) > 0; }

    const Count& at(int m, int n, std::optional<int> k = std::nullopt) const {
        auto it = entries.find(Cell{m, n, k});
        if (it == entries.end())
            throw InsufficientDepth("table " + class_id + " has no entry at (" + std::to_string(m) + "," +
                                    std::to_string(n) + ")");
        return it->second;
    }

    void set(int m, int n, Count v, std::optional<int> k = std::nullopt) { entries[Cell{m, n, k}] = std::move(v); }

    static CountTable tabulate(std::string id, std::string provenance, const TableFn& f, int m_lo, int m_hi, int n_lo,
                               int n_hi) {
        CountTable t{std::move(id), std::move(provenance), {}};
        for (int m = m_lo; m <= m_hi; ++m)
            for (int n = n_lo; n <= n_hi; ++n) t.set(m, n, f(m, n));
        return t;
    }
};

// T0-filtration: sum_{i=1}^n s(n,i) source(m,i).
inline Count f0(const TableFn& source, int m, int n) {
    Count r = 0;
    for (int i = 1; i <= n; ++i) r += stirling1(n, i) * source(m, i);
    return r;
}

inline Count f0_inv(const TableFn& source_star, int m, int n) {
    Count r = 0;
    for (int i = 1; i <= n; ++i) r += stirling2(n, i) * source_star(m, i);
    return r;
}

// Hatted sums run over i = 0..n.
inline Count f0_hat(const std::function<Count(int)>& source_hat, int n) {
    Count r = 0;
    for (int i = 0; i <= n; ++i) r += stirling1(n, i) * source_hat(i);
    return r;
}

// Conv-1 counts to conv-2 counts.
inline Count g1(const TableFn& source_tilde, int m, int n) {
    Count r = 0;
    for (int i = 1; i <= m; ++i) r += stirling2(m, i) * source_tilde(i, n);
    return r;
}

enum class Direction { to_unordered, to_ordered };

inline Count g2(const Count& source, int m, Direction direction) {
    const Count f = factorial(m);
    if (direction == Direction::to_ordered) return source * f;
    if (source % f != 0) throw NotDivisible("g2: " + source.str() + " is not divisible by " + f.str());
    return source / f;
}

// Conv-3 counts to conv-4 counts.
inline Count g3_prime(const TableFn& source_tilde, int m, int n) {
    Count r = 0;
    for (int i = 1; i <= m; ++i) r += binom(m - 1, i - 1) * source_tilde(i, n);
    return r;
}

// Lifts a conv-1 table to any convention; valid for edge partition invariant classes.
inline Count lift_from_distinct(const TableFn& conv1, RowConvention target, int m, int n) {
    if (m == 0) return conv1(0, n);
    switch (target) {
        case RowConvention::ordered_distinct:
            return conv1(m, n);
        case RowConvention::ordered:
            return g1(conv1, m, n);
        case RowConvention::unordered_distinct:
            return g2(conv1(m, n), m, Direction::to_unordered);
        case RowConvention::unordered:
            return g3_prime([&](int i, int nn) { return g2(conv1(i, nn), i, Direction::to_unordered); }, m, n);
    }
    throw std::invalid_argument("lift_from_distinct: bad convention");
}

// A set partition of {1..n} as a restricted-growth string (block label per element).
struct SetPartition {
    std::vector<int> rgs;

    int blocks() const {
        int b = 0;
        for (int v : rgs) b = std::max(b, v + 1);
        return b;
    }

    std::vector<int> block_sizes() const {
        std::vector<int> sizes(blocks(), 0);
        for (int v : rgs) ++sizes[v];
        return sizes;
    }
};

inline void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
    if (n < 1) throw std::invalid_argument("set partitions need n >= 1");
    SetPartition p{std::vector<int>(n, 0)};
    std::vector<int> prefix_max(n, 0);
    while (true) {
        visit(p);
        int i = n - 1;
        while (i >= 1 && p.rgs[i] > prefix_max[i - 1]) --i;
        if (i < 1) return;
        ++p.rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], p.rgs[i]);
        for (int j = i + 1; j < n; ++j) {
            p.rgs[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
}

// Signed weight prod over blocks of (-1)^{size-1} (size-1)!.
inline Count partition_weight(const SetPartition& p) {
    Count w = 1;
    for (int size : p.block_sizes()) {
        w *= factorial(size - 1);
        if ((size - 1) % 2) w = -w;
    }
    return w;
}

inline Count theorem1_sum(const std::function<Count(const SetPartition&)>& alpha_pi, int n) {
    Count r = 0;
    for_each_set_partition(n, [&](const SetPartition& p) { r += partition_weight(p) * alpha_pi(p); });
    return r;
}

inline Count theorem2_uniform(const std::function<Count(const exactmath::PartitionType&)>& alpha_tau, int n) {
    Count r = 0;
    for (const auto& tau : exactmath::partition_types(n)) {
        Count term = exactmath::c_tau(tau) * alpha_tau(tau);
        r += ((n - tau.blocks()) % 2) ? Count(-term) : term;
    }
    return r;
}

inline Count theorem3_regular(const std::function<Count(int)>& alpha_k, int n) {
    Count r = 0;
    for (int i = 1; i <= n; ++i) r += stirling1(n, i) * alpha_k(i);
    return r;
}

// T0 covers from an empty-edge stable property: sum_{i=1}^{n+1} s(n+1,i) source(m,i-1).
inline Count cover_shift(const TableFn& source, int m, int n) {
    Count r = 0;
    for (int i = 1; i <= n + 1; ++i) r += stirling1(n + 1, i) * source(m, i - 1);
    return r;
}

enum class NuMode { ordered, unordered };

inline Count nu_hat(NuMode mode, int m, int i) { return mode == NuMode::ordered ? binom(m, i) : Count(1); }

using Memo = std::map<std::pair<int, int>, Count>;

// One step of the connected-part recurrence; memo must hold omega(i,j) for i <= m, j < n.
inline Count f1_connected(const TableFn& alpha, const TableFn& alpha_iso, NuMode mode, int m, int n, const Memo& memo) {
    if (n < 2) throw std::invalid_argument("f1_connected needs n >= 2");
    Count r = alpha(m, n) - alpha_iso(m, n);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n - 1; ++j) {
            auto it = memo.find({i, j});
            if (it == memo.end())
                throw InsufficientDepth("f1_connected: missing omega(" + std::to_string(i) + "," + std::to_string(j) +
                                        ")");
            r -= nu_hat(mode, m, i) * binom(n - 1, j - 1) * alpha(m - i, n - j) * it->second;
        }
    }
    return r;
}

// Connected counts for every (m,n), filling the memo in increasing n.
class ConnectedRecurrence {
public:
    ConnectedRecurrence(TableFn alpha, TableFn alpha_iso, NuMode mode)
        : alpha_(std::move(alpha)), alpha_iso_(std::move(alpha_iso)), mode_(mode) {}

    Count operator()(int m, int n) {
        if (n < 1 || m < 0) throw std::invalid_argument("connected recurrence needs m >= 0, n >= 1");
        if (m == 0) return n == 1 ? 1 : 0;
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= m; ++i) {
                if (memo_.count({i, j})) continue;
                memo_[{i, j}] = j == 1 ? alpha_(i, 1) : f1_connected(alpha_, alpha_iso_, mode_, i, j, memo_);
            }
        return memo_.at({m, n});
    }

    const Memo& memo() const { return memo_; }

private:
    TableFn alpha_;
    TableFn alpha_iso_;
    NuMode mode_;
    Memo memo_;
};

// Truncated bivariate series sum c(m,n) y^m x^n / (n! [m!]); x is always exponential.
class SeriesTable {
public:
    SeriesTable(int order_x, int order_y, bool exponential_y)
        : order_x_(order_x), order_y_(order_y), exponential_y_(exponential_y),
          c_(order_x + 1, std::vector<Count>(order_y + 1, 0)) {}

    static SeriesTable for_convention(RowConvention conv, int order_x, int order_y) {
        return SeriesTable(order_x, order_y, is_ordered(conv));
    }

    int order_x() const { return order_x_; }
    int order_y() const { return order_y_; }
    bool exponential_y() const { return exponential_y_; }

    Count& at(int m, int n) { return c_.at(n).at(m); }
    const Count& at(int m, int n) const { return c_.at(n).at(m); }

    SeriesTable operator*(const SeriesTable& o) const {
        check_compatible(o);
        SeriesTable r(order_x_, order_y_, exponential_y_);
        for (int n = 0; n <= order_x_; ++n)
            for (int k = 0; k <= n; ++k) {
                auto prod = y_product(c_[k], o.c_[n - k]);
                Count w = binom(n, k);
                for (int m = 0; m <= order_y_; ++m) r.c_[n][m] += w * prod[m];
            }
        return r;
    }

    SeriesTable log() const {
        if (!unit_constant()) throw std::invalid_argument("series log needs the x^0 coefficient to be 1");
        SeriesTable l(order_x_, order_y_, exponential_y_);
        for (int n = 1; n <= order_x_; ++n) {
            std::vector<Count> v = c_[n];
            for (int k = 1; k <= n - 1; ++k) {
                auto prod = y_product(l.c_[k], c_[n - k]);
                Count w = binom(n - 1, k - 1);
                for (int m = 0; m <= order_y_; ++m) v[m] -= w * prod[m];
            }
            l.c_[n] = std::move(v);
        }
        return l;
    }

    SeriesTable exp() const {
        for (const auto& v : c_[0])
            if (v != 0) throw std::invalid_argument("series exp needs a zero x^0 coefficient");
        SeriesTable a(order_x_, order_y_, exponential_y_);
        a.c_[0][0] = 1;
        for (int n = 1; n <= order_x_; ++n) {
            std::vector<Count> v(order_y_ + 1, 0);
            for (int k = 1; k <= n; ++k) {
                auto prod = y_product(c_[k], a.c_[n - k]);
                Count w = binom(n - 1, k - 1);
                for (int m = 0; m <= order_y_; ++m) v[m] += w * prod[m];
            }
            a.c_[n] = std::move(v);
        }
        return a;
    }

    friend bool operator==(const SeriesTable&, const SeriesTable&) = default;

private:
    bool unit_constant() const {
        for (int m = 0; m <= order_y_; ++m)
            if (c_[0][m] != (m == 0 ? 1 : 0)) return false;
        return true;
    }

    void check_compatible(const SeriesTable& o) const {
        if (o.order_x_ != order_x_ || o.order_y_ != order_y_ || o.exponential_y_ != exponential_y_)
            throw std::invalid_argument("series tables differ in truncation or normalization");
    }

    std::vector<Count> y_product(const std::vector<Count>& f, const std::vector<Count>& g) const {
        std::vector<Count> r(order_y_ + 1, 0);
        for (int m = 0; m <= order_y_; ++m)
            for (int i = 0; i <= m; ++i) {
                Count t = f[i] * g[m - i];
                if (exponential_y_) t *= binom(m, i);
                r[m] += t;
            }
        return r;
    }

    int order_x_;
    int order_y_;
    bool exponential_y_;
    std::vector<std::vector<Count>> c_;  // c_[n][m]
};

struct EgfMismatch {
    int m;
    int n;
    Count expected;  // coefficient of 1 + ln A
    Count actual;    // omega table entry
};

// First cell where Omega = 1 + ln A fails, scanning n then m.
inline std::optional<EgfMismatch> egf_log_mismatch(const CountTable& alpha_table, const CountTable& omega_table,
                                                   RowConvention conv, int order_x, int order_y) {
    auto a = SeriesTable::for_convention(conv, order_x, order_y);
    for (int n = 0; n <= order_x; ++n)
        for (int m = 0; m <= order_y; ++m) a.at(m, n) = alpha_table.at(m, n);
    auto l = a.log();
    for (int n = 0; n <= order_x; ++n)
        for (int m = 0; m <= order_y; ++m) {
            Count expected = n == 0 ? Count(m == 0 ? 1 : 0) : l.at(m, n);
            if (n == 0 && !omega_table.has(m, n)) {
                continue;
            }
            const Count& actual = omega_table.at(m, n);
            if (actual != expected) return EgfMismatch{m, n, expected, actual};
        }
    return std::nullopt;
}

inline bool egf_log_check(const CountTable& alpha_table, const CountTable& omega_table, RowConvention conv,
                          int order_x, int order_y) {
    return !egf_log_mismatch(alpha_table, omega_table, conv, order_x, order_y);
}

}  // namespace t0enum::transforms
