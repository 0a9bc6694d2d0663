#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "exactmath.hpp"
#include "hypercore.hpp"

namespace t0enum::oracle {

using hypercore::ClassSpec;
using hypercore::RowCode;

struct OracleBudget {
    long long max_cells = 20;     // cap on m*n for ordered enumeration
    long long max_universe = 64;  // cap on 2^n for unordered enumeration

    // Defaults, with T0ENUM_BUDGET_CELLS overriding max_cells.
    static OracleBudget from_env() {
        OracleBudget b;
        if (const char* v = std::getenv("T0ENUM_BUDGET_CELLS")) {
            try {
                long long cells = std::stoll(v);
                if (cells > 0) b.max_cells = cells;
            } catch (const std::exception&) {
            }
        }
        return b;
    }
};

namespace detail {

inline void check_budget(RowConvention conv, int m, int n, const OracleBudget& budget) {
    if (m < 1 || n < 1) throw std::invalid_argument("oracle needs m >= 1 and n >= 1");
    if (n > 30) throw BudgetExceeded("n", n, 30);
    if (is_ordered(conv)) {
        if (static_cast<long long>(m) * n > budget.max_cells)
            throw BudgetExceeded("m*n", static_cast<long long>(m) * n, budget.max_cells);
    } else {
        long long universe = 1LL << n;
        if (universe > budget.max_universe) throw BudgetExceeded("2^n", universe, budget.max_universe);
    }
}

// Visits every row sequence of the convention whose first row lies in [lo, hi).
// Conventions 1 and 3 both yield strictly increasing sequences.
template <class Visit>
void enumerate_rows(RowConvention conv, int m, int n, RowCode lo, RowCode hi, Visit&& visit) {
    const RowCode universe = RowCode(1) << n;
    std::vector<RowCode> rows(m);
    std::function<void(int)> fill = [&](int depth) {
        if (depth == m) {
            visit(rows);
            return;
        }
        RowCode start = 0, stop = universe;
        if (depth == 0) {
            start = lo;
            stop = hi;
        } else if (conv == RowConvention::unordered) {
            start = rows[depth - 1];
        } else if (conv != RowConvention::ordered) {
            start = rows[depth - 1] + 1;
        }
        for (RowCode r = start; r < stop; ++r) {
            rows[depth] = r;
            fill(depth + 1);
        }
    };
    fill(0);
}

inline unsigned default_threads() {
    unsigned t = std::thread::hardware_concurrency();
    return t == 0 ? 1 : t;
}

}  // namespace detail

// Counts the labelled (m,n)-hypergraphs of a class by exhaustive enumeration.
// The range of the first row is split into chunks that are summed in order.
inline Count count(const ClassSpec& spec_in, int m, int n, const OracleBudget& budget = {}, unsigned threads = 0) {
    const ClassSpec spec = spec_in.normalized();
    spec.validate();
    const RowConvention conv = spec.row_convention;
    detail::check_budget(conv, m, n, budget);
    const RowCode universe = RowCode(1) << n;
    if (threads == 0) threads = detail::default_threads();
    const RowCode chunks = std::min<RowCode>(universe, std::max<unsigned>(threads, 1) * 4);

    auto run_chunk = [&](RowCode c) {
        RowCode lo = universe * c / chunks, hi = universe * (c + 1) / chunks;
        std::uint64_t hits = 0;
        detail::enumerate_rows(conv, m, n, lo, hi, [&](const std::vector<RowCode>& rows) {
            if (hypercore::satisfies(std::span<const RowCode>(rows), n, spec)) ++hits;
        });
        return hits;
    };

    std::vector<std::uint64_t> partial(chunks, 0);
    if (threads <= 1) {
        for (RowCode c = 0; c < chunks; ++c) partial[c] = run_chunk(c);
    } else {
        std::vector<std::future<std::uint64_t>> jobs;
        for (RowCode c = 0; c < chunks; ++c) jobs.push_back(std::async(std::launch::async, run_chunk, c));
        for (RowCode c = 0; c < chunks; ++c) partial[c] = jobs[c].get();
    }
    Count total = 0;
    for (auto p : partial) total += p;
    if (conv == RowConvention::ordered_distinct) total *= exactmath::factorial(m);
    return total;
}

// Counts m x n matrices whose transpose lies in the class. The row convention
// applies to the transposed matrix, so only the ordered conventions make sense.
inline Count count_dual(const ClassSpec& spec_in, int m, int n, const OracleBudget& budget = {}) {
    const ClassSpec spec = spec_in.normalized();
    spec.validate();
    if (!is_ordered(spec.row_convention)) throw std::invalid_argument("count_dual needs an ordered row convention");
    if (m < 1 || n < 1) throw std::invalid_argument("oracle needs m >= 1 and n >= 1");
    if (static_cast<long long>(m) * n > budget.max_cells)
        throw BudgetExceeded("m*n", static_cast<long long>(m) * n, budget.max_cells);
    std::uint64_t hits = 0;
    detail::enumerate_rows(RowConvention::ordered, m, n, 0, RowCode(1) << n, [&](const std::vector<RowCode>& rows) {
        auto dual = hypercore::transpose(hypercore::IncidenceMatrix(n, rows));
        if (spec.row_convention == RowConvention::ordered_distinct) {
            auto r = dual.rows();
            std::sort(r.begin(), r.end());
            if (std::adjacent_find(r.begin(), r.end()) != r.end()) return;
        }
        if (hypercore::satisfies(dual, spec)) ++hits;
    });
    return Count(hits);
}

// Simple graphs (optionally with loops) on n labelled vertices with m edges and no
// component made of a single non-loop edge; optionally without isolated vertices.
inline Count count_graphs_without_bare_edges(int m, int n, bool loops, bool no_isolated,
                                             const OracleBudget& budget = {}) {
    if (m < 0 || n < 1) throw std::invalid_argument("graph oracle needs m >= 0 and n >= 1");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        if (loops) slots.emplace_back(i, i);
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    if (static_cast<long long>(slots.size()) > budget.max_universe)
        throw BudgetExceeded("edge slots", static_cast<long long>(slots.size()), budget.max_universe);
    const int s = static_cast<int>(slots.size());
    if (m > s) return 0;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    std::uint64_t hits = 0;
    while (true) {
        std::vector<int> parent(n), degree(n, 0), size(n, 0), edges(n, 0), loops_at(n, 0);
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int idx : pick) {
            auto [a, b] = slots[idx];
            ++degree[a];
            if (a != b) {
                ++degree[b];
                parent[find(b)] = find(a);
            }
        }
        for (int v = 0; v < n; ++v) ++size[find(v)];
        for (int idx : pick) {
            auto [a, b] = slots[idx];
            ++(a == b ? loops_at : edges)[find(a)];
        }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (no_isolated && degree[v] == 0) ok = false;
            if (find(v) == v && size[v] == 2 && edges[v] == 1 && loops_at[v] == 0) ok = false;
        }
        if (ok) ++hits;
        int i = m - 1;
        while (i >= 0 && pick[i] == s - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return Count(hits);
}

}  // namespace t0enum::oracle
