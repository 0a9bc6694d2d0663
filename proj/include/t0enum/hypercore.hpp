#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exactmath.hpp"

namespace t0enum::hypercore {

// Vertex j of an edge is bit j-1.
using RowCode = std::uint64_t;
inline constexpr int max_width = 63;

inline RowCode full_row(int n) { return (RowCode(1) << n) - 1; }

inline RowCode canonical_row_code(const std::vector<bool>& row) {
    if (static_cast<int>(row.size()) > max_width) throw std::invalid_argument("row wider than a machine word");
    RowCode code = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j]) code |= RowCode(1) << j;
    return code;
}

class IncidenceMatrix {
public:
    IncidenceMatrix(int n, std::vector<RowCode> rows) : n_(n), rows_(std::move(rows)) {
        if (n < 0 || n > max_width) throw std::invalid_argument("matrix width out of range");
        for (RowCode r : rows_)
            if (r & ~full_row(n)) throw std::invalid_argument("row code wider than n");
    }

    // Each string lists vertices 1..n left to right, e.g. "10" is the edge {1}.
    static IncidenceMatrix parse(const std::vector<std::string>& rows, int n = -1) {
        if (n < 0) n = rows.empty() ? 0 : static_cast<int>(rows.front().size());
        std::vector<RowCode> codes;
        for (const auto& s : rows) {
            if (static_cast<int>(s.size()) != n) throw std::invalid_argument("ragged row: " + s);
            std::vector<bool> bits;
            for (char c : s) {
                if (c != '0' && c != '1') throw std::invalid_argument("bad matrix digit in " + s);
                bits.push_back(c == '1');
            }
            codes.push_back(canonical_row_code(bits));
        }
        return IncidenceMatrix(n, std::move(codes));
    }

    int m() const { return static_cast<int>(rows_.size()); }
    int n() const { return n_; }
    const std::vector<RowCode>& rows() const { return rows_; }
    bool at(int edge, int vertex) const { return (rows_.at(edge) >> vertex) & 1U; }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < m(); ++i) {
            if (i) os << ' ';
            for (int j = 0; j < n_; ++j) os << (at(i, j) ? '1' : '0');
        }
        return os.str();
    }

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

private:
    int n_;
    std::vector<RowCode> rows_;
};

inline IncidenceMatrix transpose(const IncidenceMatrix& a) {
    if (a.m() > max_width) throw std::invalid_argument("transpose: too many rows for a machine word");
    std::vector<RowCode> cols(a.n(), 0);
    for (int i = 0; i < a.m(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (a.at(i, j)) cols[j] |= RowCode(1) << i;
    return IncidenceMatrix(a.m(), std::move(cols));
}

enum class Uniformity { none, exact, at_most };
enum class VertexDegree { none, exact_cover, at_most_cover };

struct ClassSpec {
    RowConvention row_convention = RowConvention::ordered;
    bool forbid_empty_edges = false;
    bool forbid_full_edges = false;
    bool require_cover = false;
    bool forbid_intersecting = false;
    bool forbid_singular = false;
    bool require_connected = false;
    bool require_minimal_cover = false;
    bool require_t0 = false;
    Uniformity uniformity = Uniformity::none;
    std::optional<int> uniformity_k;
    VertexDegree vertex_degree = VertexDegree::none;
    std::optional<int> degree_k;

    bool needs_k() const {
        return (uniformity != Uniformity::none && !uniformity_k) ||
               (vertex_degree != VertexDegree::none && !degree_k);
    }

    // Fills any unset uniformity/degree parameter.
    ClassSpec with_k(int k) const {
        ClassSpec s = *this;
        if (s.uniformity != Uniformity::none && !s.uniformity_k) s.uniformity_k = k;
        if (s.vertex_degree != VertexDegree::none && !s.degree_k) s.degree_k = k;
        return s.normalized();
    }

    ClassSpec normalized() const {
        ClassSpec s = *this;
        if (s.require_minimal_cover) s.require_cover = true;
        if (s.forbid_singular) s.require_cover = s.forbid_intersecting = true;
        if (s.uniformity == Uniformity::exact && s.uniformity_k && *s.uniformity_k >= 1) s.forbid_empty_edges = true;
        return s;
    }

    void validate() const {
        if (uniformity != Uniformity::none && !uniformity_k)
            throw MissingParameter("uniformity constraint needs its k parameter");
        if (vertex_degree != VertexDegree::none && !degree_k)
            throw MissingParameter("vertex degree constraint needs its k parameter");
        if (require_minimal_cover && !require_cover) throw std::invalid_argument("minimal cover without cover flag");
        if (forbid_singular && !(require_cover && forbid_intersecting))
            throw std::invalid_argument("forbid_singular without cover and no-intersecting flags");
    }

    std::string describe() const {
        std::vector<std::string> parts;
        parts.push_back("conv" + std::to_string(index_of(row_convention)));
        auto kstr = [](const std::optional<int>& k) { return k ? std::to_string(*k) : std::string("k"); };
        if (forbid_empty_edges) parts.push_back("no_empty_edge");
        if (forbid_full_edges) parts.push_back("no_full_edge");
        if (require_cover) parts.push_back("cover");
        if (forbid_intersecting) parts.push_back("not_intersecting");
        if (forbid_singular) parts.push_back("no_singular_vertex");
        if (require_connected) parts.push_back("connected");
        if (require_minimal_cover) parts.push_back("minimal_cover");
        if (require_t0) parts.push_back("t0");
        if (uniformity == Uniformity::exact) parts.push_back("uniform(" + kstr(uniformity_k) + ")");
        if (uniformity == Uniformity::at_most) parts.push_back("dim_at_most(" + kstr(uniformity_k) + ")");
        if (vertex_degree == VertexDegree::exact_cover) parts.push_back("exact_cover(" + kstr(degree_k) + ")");
        if (vertex_degree == VertexDegree::at_most_cover) parts.push_back("at_most_cover(" + kstr(degree_k) + ")");
        std::string out;
        for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
        return out;
    }

    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

namespace detail {

inline bool columns_distinct(std::span<const RowCode> rows, int n) {
    std::array<RowCode, max_width> cols{};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RowCode r = rows[i];
        while (r) {
            int j = std::countr_zero(r);
            cols[j] |= RowCode(1) << i;
            r &= r - 1;
        }
    }
    std::sort(cols.begin(), cols.begin() + n);
    return std::adjacent_find(cols.begin(), cols.begin() + n) == cols.begin() + n;
}

inline bool connected(std::span<const RowCode> rows, int n) {
    if (n == 1) return true;
    std::array<int, max_width> parent{};
    for (int j = 0; j < n; ++j) parent[j] = j;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    for (RowCode r : rows) {
        if (!r) continue;
        int root = find(std::countr_zero(r));
        r &= r - 1;
        while (r) {
            int other = find(std::countr_zero(r));
            if (other != root) {
                parent[other] = root;
                --components;
            }
            r &= r - 1;
        }
    }
    return components == 1;
}

inline bool degrees_ok(std::span<const RowCode> rows, int n, VertexDegree mode, int k) {
    std::array<int, max_width> deg{};
    for (RowCode r : rows) {
        while (r) {
            ++deg[std::countr_zero(r)];
            r &= r - 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        if (mode == VertexDegree::exact_cover ? deg[j] != k : (deg[j] < 1 || deg[j] > k)) return false;
    }
    return true;
}

}  // namespace detail

// Row convention is ignored: it belongs to counting, not to a single matrix.
inline bool satisfies(std::span<const RowCode> rows, int n, const ClassSpec& spec) {
    spec.validate();
    const RowCode full = full_row(n);
    RowCode any = 0, all = full, once = 0, twice = 0;
    for (RowCode r : rows) {
        if (spec.forbid_empty_edges && r == 0) return false;
        if (spec.forbid_full_edges && r == full) return false;
        if (spec.uniformity != Uniformity::none) {
            int w = std::popcount(r);
            if (spec.uniformity == Uniformity::exact ? w != *spec.uniformity_k : w > *spec.uniformity_k) return false;
        }
        twice |= once & r;
        once = (once | r) & ~twice;
        any |= r;
        all &= r;
    }
    const bool cover = any == full;
    const bool intersecting = all != 0;
    if (spec.require_cover && !cover) return false;
    if (spec.forbid_intersecting && intersecting) return false;
    if (spec.forbid_singular && (!cover || intersecting)) return false;
    if (spec.require_minimal_cover) {
        if (!cover) return false;
        for (RowCode r : rows)
            if (!(r & once)) return false;
    }
    if (spec.vertex_degree != VertexDegree::none && !detail::degrees_ok(rows, n, spec.vertex_degree, *spec.degree_k))
        return false;
    if (spec.require_t0 && !detail::columns_distinct(rows, n)) return false;
    if (spec.require_connected && !detail::connected(rows, n)) return false;
    return true;
}

inline bool satisfies(const IncidenceMatrix& a, const ClassSpec& spec) {
    return satisfies(std::span<const RowCode>(a.rows()), a.n(), spec);
}

}  // namespace t0enum::hypercore
