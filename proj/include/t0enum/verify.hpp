#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "catalog/catalog.hpp"
#include "oracle.hpp"

namespace t0enum {

using catalog::ClassEntry;
using catalog::ErrataStatus;
using catalog::Reading;

struct ErrataRecord {
    std::string class_id;
    int m = 0;
    int n = 0;
    std::optional<int> k;
    Count formula_value;
    Count oracle_value;
    std::string paper_ref_text;
    ErrataStatus status = ErrataStatus::unresolved;

    friend bool operator<(const ErrataRecord& a, const ErrataRecord& b) {
        return std::tie(a.class_id, a.k, a.m, a.n) < std::tie(b.class_id, b.k, b.m, b.n);
    }
};

struct GridOptions {
    int m_max = 4;
    int n_max = 4;
    int m_max_unordered = 5;
    std::optional<int> k;  // all of 1..3 (k <= n) when unset
};

struct VerifyReport {
    std::string class_id;
    bool oracle_only = false;
    int cells_checked = 0;
    int cells_skipped = 0;
    std::vector<ErrataRecord> errata;

    bool verified() const { return !oracle_only && errata.empty(); }
};

inline Count oracle_value(const ClassEntry& e, int m, int n, std::optional<int> k, const oracle::OracleBudget& budget) {
    if (e.needs_k && !k) throw MissingParameter("class " + e.id + " needs --k");
    if (e.custom_oracle) return e.custom_oracle(m, n, k.value_or(0), budget);
    if (!e.spec) throw std::logic_error("class " + e.id + " has no oracle binding");
    const hypercore::ClassSpec spec = e.needs_k ? e.spec->with_k(*k) : *e.spec;
    return oracle::count(spec, m, n, budget);
}

inline std::vector<std::optional<int>> k_values(const ClassEntry& e, int n, const GridOptions& grid) {
    if (!e.needs_k) return {std::nullopt};
    std::vector<std::optional<int>> ks;
    if (grid.k) {
        if (*grid.k <= n) ks.push_back(grid.k);
        return ks;
    }
    for (int k = 1; k <= std::min(3, n); ++k) ks.push_back(k);
    return ks;
}

// Formula against oracle on every in-budget cell of the grid.
inline VerifyReport verify_grid(const ClassEntry& e, const GridOptions& grid, const oracle::OracleBudget& budget,
                                Reading reading = Reading::printed) {
    VerifyReport report{e.id};
    if (e.oracle_only()) {
        report.oracle_only = true;
        return report;
    }
    const int m_max = is_ordered(e.convention) ? grid.m_max : grid.m_max_unordered;
    for (int m = 1; m <= m_max; ++m)
        for (int n = 1; n <= grid.n_max; ++n)
            for (auto k : k_values(e, n, grid)) {
                Count expected;
                try {
                    expected = oracle_value(e, m, n, k, budget);
                } catch (const BudgetExceeded&) {
                    ++report.cells_skipped;
                    continue;
                }
                ++report.cells_checked;
                Count got = e.evaluate(m, n, k, reading);
                if (got == expected) continue;
                ErrataStatus status = e.status;
                if (reading == Reading::corrected || status == ErrataStatus::none) status = ErrataStatus::unresolved;
                report.errata.push_back({e.id, m, n, k, got, expected, e.citation, status});
            }
    std::sort(report.errata.begin(), report.errata.end());
    return report;
}

inline VerifyReport verify_grid(const std::string& class_id, const GridOptions& grid,
                                const oracle::OracleBudget& budget, Reading reading = Reading::printed) {
    return verify_grid(catalog::resolve_class(class_id), grid, budget, reading);
}

}  // namespace t0enum
