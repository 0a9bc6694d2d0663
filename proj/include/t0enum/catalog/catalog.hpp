#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "../hypercore.hpp"
#include "../oracle.hpp"
#include "connected.hpp"

namespace t0enum::catalog {

using hypercore::ClassSpec;
using hypercore::Uniformity;
using hypercore::VertexDegree;

enum class ErrataStatus { none, confirmed_typo, convention_gap, unresolved };

inline std::string to_string(ErrataStatus s) {
    switch (s) {
        case ErrataStatus::none:
            return "none";
        case ErrataStatus::confirmed_typo:
            return "confirmed-typo";
        case ErrataStatus::convention_gap:
            return "convention-gap";
        case ErrataStatus::unresolved:
            return "unresolved";
    }
    return "unresolved";
}

using Evaluator = std::function<Count(int m, int n, int k)>;
using CustomOracle = std::function<Count(int m, int n, int k, const oracle::OracleBudget&)>;

struct ClassEntry {
    std::string id;
    std::string family;
    int index = 0;
    RowConvention convention = RowConvention::ordered;
    bool t0 = false;
    std::string citation;
    bool needs_k = false;
    std::optional<ClassSpec> spec;
    CustomOracle custom_oracle;
    Evaluator printed;    // empty for oracle-only classes
    Evaluator corrected;  // empty when the printed formula stands
    ErrataStatus status = ErrataStatus::none;
    std::string errata_note;

    bool oracle_only() const { return !printed; }

    const Evaluator& evaluator(Reading r) const {
        if (oracle_only()) throw OracleOnlyClass(id);
        return (r == Reading::corrected && corrected) ? corrected : printed;
    }

    Count evaluate(int m, int n, std::optional<int> k, Reading r = Reading::printed) const {
        if (needs_k && !k) throw MissingParameter("class " + id + " needs --k");
        return evaluator(r)(m, n, k.value_or(0));
    }

    std::string spec_text() const {
        if (spec) return spec->describe();
        return "custom oracle";
    }
};

namespace detail {

inline std::string cstr(RowConvention c) { return std::to_string(index_of(c)); }

// j: bit 0 no empty edges, bit 1 no full edges.
inline ClassSpec column_spec(int j, RowConvention c) {
    ClassSpec s;
    s.row_convention = c;
    s.forbid_empty_edges = j & 1;
    s.forbid_full_edges = j & 2;
    return s;
}

inline ClassSpec with_t0(ClassSpec s, bool t0 = true) {
    s.require_t0 = t0;
    return s;
}

inline ClassSpec shaped(ClassSpec s, Shape shape) {
    s.uniformity = shape == Shape::uniform ? Uniformity::exact : Uniformity::at_most;
    if (shape == Shape::bounded) s.forbid_empty_edges = true;
    return s;
}

class Builder {
public:
    std::vector<ClassEntry> entries;

    ClassEntry& add(ClassEntry e) {
        entries.push_back(std::move(e));
        return entries.back();
    }

    static Evaluator mn(std::function<Count(int, int)> f) {
        return [f = std::move(f)](int m, int n, int) { return f(m, n); };
    }
};

inline void add_alpha(Builder& b) {
    for (RowConvention c : all_conventions)
        for (int j = 0; j < 4; ++j) {
            const std::string jc = std::to_string(j) + cstr(c);
            const std::string rows = j == 0 ? "2^n" : j == 3 ? "2^n - 2" : "2^n - 1";
            b.add({.id = "alpha_" + jc,
                   .family = "alpha",
                   .index = j,
                   .convention = c,
                   .citation = "alpha_" + jc + "(m,n) = lambda_" + cstr(c) + "(" + rows + ", m)",
                   .spec = column_spec(j, c),
                   .printed = Builder::mn([=](int m, int n) { return alpha(j, c, m, n); })});
            b.add({.id = "alpha_star_" + jc,
                   .family = "alpha",
                   .index = j,
                   .convention = c,
                   .t0 = true,
                   .citation = "alpha*_" + jc + "(m,n) = sum_i s(n,i) alpha_" + jc + "(m,i)",
                   .spec = with_t0(column_spec(j, c)),
                   .printed = Builder::mn([=](int m, int n) { return alpha_star(j, c, m, n); })});
        }
    for (RowConvention c : all_conventions)
        for (int i = 0; i < 4; ++i) {
            const std::string ic = std::to_string(i) + cstr(c);
            ClassSpec s = column_spec(i, c);
            s.forbid_intersecting = true;
            b.add({.id = "alpha_bar_" + ic,
                   .family = "alpha_bar",
                   .index = i,
                   .convention = c,
                   .citation = "alpha_bar_i1(m,n) = sum_j (-1)^j C(n,j) alpha_(i-j)1(m,n-j); alpha_bar_01(1,n) = "
                               "alpha_bar_21(1,n) = 1",
                   .spec = s,
                   .printed = Builder::mn([=](int m, int n) { return bar_alpha(i, c, m, n); })});
            b.add({.id = "alpha_bar_star_" + ic,
                   .family = "alpha_bar",
                   .index = i,
                   .convention = c,
                   .t0 = true,
                   .citation = "alpha_bar*_" + ic + "(m,n) = sum_i s(n,i) alpha_bar_" + ic + "(m,i)",
                   .spec = with_t0(s),
                   .printed = Builder::mn([=](int m, int n) { return bar_alpha_star(i, c, m, n); })});
        }
}

inline void add_beta(Builder& b) {
    for (RowConvention c : all_conventions)
        for (int i = 0; i < 8; ++i) {
            const std::string ic = std::to_string(i) + cstr(c);
            ClassSpec s = column_spec(i & 3, c);
            s.require_cover = true;
            if (i >= 4) s.forbid_singular = true;
            b.add({.id = "beta_" + ic,
                   .family = "beta",
                   .index = i,
                   .convention = c,
                   .citation = i < 4 ? "beta_" + ic + "(m,n) = sum_j (-1)^j C(n,j) alpha(m,n-j)"
                                     : "beta_i1(m,n) = alpha_bar_(i-4)1(m,n) + sum_j (-1)^j C(n,j) "
                                       "alpha_bar_(i mod 2)1(m,n-j); beta_i1(1,n) = 0",
                   .spec = s.normalized(),
                   .printed = Builder::mn([=](int m, int n) { return beta(i, c, m, n); })});
            b.add({.id = "beta_star_" + ic,
                   .family = "beta",
                   .index = i,
                   .convention = c,
                   .t0 = true,
                   .citation = i < 4 ? std::string("beta*_01(m,n) = sum_i s(n+1,i) [2^(i-1)]_m; beta*_21(m,n) = "
                                                   "beta*_01(m,n) - m alpha*_21(m-1,n)")
                                     : "beta*_" + ic + "(m,n) = sum_i s(n,i) beta_" + ic + "(m,i)",
                   .spec = with_t0(s.normalized()),
                   .printed = Builder::mn([=](int m, int n) { return beta_star(i, c, m, n); })});
        }
    ClassSpec cover = column_spec(0, conv1);
    cover.require_cover = true;
    b.add({.id = "beta_01_as_printed",
           .family = "beta",
           .index = 0,
           .convention = conv1,
           .citation = "beta_01(m,n) = (2^m-1)^n",
           .spec = cover,
           .printed = Builder::mn(beta01_printed),
           .corrected = Builder::mn([](int m, int n) { return beta(0, conv1, m, n); }),
           .status = ErrataStatus::convention_gap,
           .errata_note = "(2^m-1)^n counts convention-2 covers; the convention-1 count is the cover sieve"});
    ClassSpec singular_free = cover;
    singular_free.forbid_singular = true;
    b.add({.id = "beta_41_as_printed",
           .family = "beta",
           .index = 4,
           .convention = conv1,
           .citation = "beta_41(m,n) = sum_i (-1)^i C(n,i) 2^i [n-i]_m",
           .spec = singular_free.normalized(),
           .printed = Builder::mn([](int m, int n) { return beta41_simple(m, n, Reading::printed); }),
           .corrected = Builder::mn([](int m, int n) { return beta41_simple(m, n, Reading::corrected); }),
           .status = ErrataStatus::confirmed_typo,
           .errata_note = "falling factorial argument is 2^(n-i), not n-i"});
}

inline void add_mu(Builder& b) {
    ClassSpec minimal = column_spec(0, conv1);
    minimal.require_minimal_cover = true;
    minimal = minimal.normalized();
    ClassSpec minimal_free = minimal;
    minimal_free.forbid_singular = true;
    minimal_free = minimal_free.normalized();

    b.add({.id = "mu_01",
           .family = "mu",
           .convention = conv1,
           .citation = "mu_01(m,n) = sum_{i=m}^n C(n,i) S(i,m) m! (2^m-m-1)^(n-i)",
           .spec = minimal,
           .printed = Builder::mn(mu01)});
    b.add({.id = "mu_star_01",
           .family = "mu",
           .convention = conv1,
           .t0 = true,
           .citation = "mu*_01(m,n) = n! C(2^m-m-1, n-m)",
           .spec = with_t0(minimal),
           .printed = Builder::mn(mu_star01_closed)});
    b.add({.id = "mu_41",
           .family = "mu",
           .index = 4,
           .convention = conv1,
           .citation = "mu_41(m,n) = sum_i (-1)^i C(n,i) mu_01(m,n-i); 0 if n < m or m = 1",
           .spec = minimal_free,
           .printed = Builder::mn(mu41)});
    b.add({.id = "mu_star_41",
           .family = "mu",
           .index = 4,
           .convention = conv1,
           .t0 = true,
           .citation = "mu*_41(m,n) = sum_i s(n,i) mu_41(m,i)",
           .spec = with_t0(minimal_free),
           .printed = Builder::mn(mu_star41)});
    for (int i : {0, 4}) {
        ClassSpec s = i == 0 ? minimal : minimal_free;
        s.uniformity = Uniformity::at_most;
        b.add({.id = "mu_bar_" + std::to_string(i) + "1",
               .family = "mu_bar",
               .index = i,
               .convention = conv1,
               .citation = "mu_bar_" + std::to_string(i) + "1(m,n,k): no formula; mu_bar_01(m,n,k) = mu_01(m,n) for k >= n",
               .needs_k = true,
               .spec = s});
    }
    ClassSpec one_cover = minimal;
    one_cover.vertex_degree = VertexDegree::exact_cover;
    one_cover.degree_k = 1;
    b.add({.id = "mu_1cover_01",
           .family = "mu",
           .convention = conv1,
           .citation = "minimal 1-covers: S(n,m)",
           .spec = one_cover,
           .printed = Builder::mn([](int m, int n) { return mu_one_cover(m, n, Reading::printed); }),
           .corrected = Builder::mn([](int m, int n) { return mu_one_cover(m, n, Reading::corrected); }),
           .status = ErrataStatus::convention_gap,
           .errata_note = "S(n,m) counts unordered distinct edges; convention 1 needs m! S(n,m)"});
    b.add({.id = "mu_1cover_star_01",
           .family = "mu",
           .convention = conv1,
           .t0 = true,
           .citation = "T0 minimal 1-covers: m! [m = n]",
           .spec = with_t0(one_cover),
           .printed = Builder::mn(mu_one_cover_star)});
}

inline std::string shape_prefix(Shape shape) { return shape == Shape::uniform ? "theta" : "theta_bar"; }

// idx: 0 plain, 1 cover, 2 minimal cover, 3 no intersecting, 4 cover and no intersecting, 5 minimal and no intersecting.
inline ClassSpec theta_spec(Shape shape, int idx, RowConvention c) {
    ClassSpec s = shaped(column_spec(0, c), shape);
    if (idx == 1 || idx == 4) s.require_cover = true;
    if (idx == 2 || idx == 5) s.require_minimal_cover = true;
    if (idx >= 3) s.forbid_intersecting = true;
    return s.normalized();
}

inline void add_theta(Builder& b) {
    for (Shape shape : {Shape::uniform, Shape::bounded}) {
        const std::string pre = shape_prefix(shape);
        const bool bounded = shape == Shape::bounded;
        const std::string slots = bounded ? "Cbar(n,k)" : "C(n,k)";
        for (RowConvention c : all_conventions)
            for (int idx : {0, 1, 3, 4}) {
                const std::string ic = std::to_string(idx) + cstr(c);
                ClassEntry e{.id = pre + "_" + ic,
                             .family = pre,
                             .index = idx,
                             .convention = c,
                             .needs_k = true,
                             .spec = theta_spec(shape, idx, c)};
                switch (idx) {
                    case 0:
                        e.citation = pre + "_01(m,n,k) = [" + slots + "]_m";
                        break;
                    case 1:
                        e.citation = pre + "_11(m,n,k) = sum_i (-1)^i C(n,i) [" + (bounded ? "Cbar(n-i,k)" : "C(n-i,k)") +
                                     "]_m";
                        break;
                    default:
                        e.citation = bounded ? "theta_bar_" + ic +
                                                   "(m,n,k) = theta_bar_(" + std::to_string(idx - 3) +
                                                   ")1(m,n,k) + sum_i (-1)^i C(n,i) theta'_(" + std::to_string(idx - 3) +
                                                   ")1(m,n-i,k-i), theta' over C(t,k)+1 slots"
                                             : "theta_" + ic + "(m,n,k) = sum_{i<k} (-1)^i C(n,i) theta_(" +
                                                   std::to_string(idx - 3) + ")1(m,n-i,k-i)";
                }
                e.printed = [=](int m, int n, int k) { return theta(shape, idx, c, m, n, k, Reading::printed); };
                if (bounded && idx >= 3) {
                    e.corrected = [=](int m, int n, int k) { return theta(shape, idx, c, m, n, k, Reading::corrected); };
                    e.status = ErrataStatus::confirmed_typo;
                    e.errata_note = "the primed numbers need Cbar(t,k) slots and the sieve must run to n-1";
                }
                b.add(std::move(e));
            }
        for (int idx : {2, 5})
            b.add({.id = pre + "_" + std::to_string(idx) + "1",
                   .family = pre,
                   .index = idx,
                   .convention = conv1,
                   .citation = pre + "_" + std::to_string(idx) + "1(m,n,k): no formula (minimal k-covers)",
                   .needs_k = true,
                   .spec = theta_spec(shape, idx, conv1)});
    }
}

inline void add_theta_star(Builder& b) {
    for (Shape shape : {Shape::uniform, Shape::bounded}) {
        const std::string pre = shape_prefix(shape);
        const bool bounded = shape == Shape::bounded;
        for (RowConvention s : all_conventions)
            for (int idx : {0, 1, 3, 4}) {
                const std::string is = std::to_string(idx) + cstr(s);
                ClassEntry e{.id = pre + "_star_" + is,
                             .family = pre,
                             .index = idx,
                             .convention = s,
                             .t0 = true,
                             .needs_k = true,
                             .spec = with_t0(theta_spec(shape, idx, s))};
                const std::string d = pre + "*";
                switch (idx) {
                    case 0:
                        e.citation = d + "_0s(m,n,k) = sum_alpha (-1)^(n-|alpha|) c(alpha) lambda_s(" +
                                     (bounded ? "nu_le(alpha,k)" : "nu(alpha,k)") + ", m)";
                        break;
                    case 1:
                        e.citation = d + "_1s(m,n+1,k) = " + d + "_0s(m,n+1,k) - (n+1) " + d + "_1i(m,n,k)";
                        break;
                    case 3:
                        e.citation = d + "_3s(m,n+1,k) = " + d + "_0s(m,n+1,k) - (n+1) " + d + "_3s(m,n,k)";
                        break;
                    case 4:
                        e.citation = d + "_4s(m,n+1,k) = " + d + "_3s(m,n+1,k) - (n+1) " + d + "_14(m,n,k)";
                        break;
                }
                e.printed = [=](int m, int n, int k) { return theta_star(shape, idx, s, m, n, k, Reading::printed); };
                const bool differs = idx == 3 || idx == 4 || (idx == 1 && s != conv1);
                if (differs) {
                    e.corrected = [=](int m, int n, int k) {
                        return theta_star(shape, idx, s, m, n, k, Reading::corrected);
                    };
                    e.status = ErrataStatus::confirmed_typo;
                    if (idx == 1) e.errata_note = "the subtracted term is the same class at (m,n,k)";
                    if (idx == 3)
                        e.errata_note = bounded ? "deleting a singular vertex lowers k, and the remainder may have "
                                                  "empty edges"
                                                : "the subtracted term is taken at k-1";
                    if (idx == 4) e.errata_note = "the subtracted term is the same class at (m,n,k), over corrected inputs";
                }
                b.add(std::move(e));
            }
        for (int idx : {2, 5}) {
            const std::string id = pre + "_star_" + std::to_string(idx) + "1";
            const int inner = idx == 2 ? 1 : 4;
            b.add({.id = id,
                   .family = pre,
                   .index = idx,
                   .convention = conv1,
                   .t0 = true,
                   .citation = bounded ? pre + "*_" + std::to_string(idx) + "1(m,n,k) = [n]_m sum_j C(m,j) " + pre +
                                             "*_" + std::to_string(inner) + "2(j,n-m,k-1)"
                                       : pre + "*_" + std::to_string(idx) + "1(m,n,k) = [n]_m " + pre + "*_" +
                                             std::to_string(inner) + "2(m,n-m,k-1)",
                   .needs_k = true,
                   .spec = with_t0(theta_spec(shape, idx, conv1)),
                   .printed = [=](int m, int n, int k) { return theta_star_minimal(shape, idx, m, n, k, Reading::printed); },
                   .corrected = [=](int m, int n,
                                    int k) { return theta_star_minimal(shape, idx, m, n, k, Reading::corrected); },
                   .status = ErrataStatus::confirmed_typo,
                   .errata_note = "the reduced columns must still have weight at least 2 and stay distinct"});
        }
    }
}

inline void add_two_covers(Builder& b) {
    for (bool loops : {false, true}) {
        const std::string bar = loops ? "bbar" : "bar";
        b.add({.id = "theta_circ_" + bar + "_03",
               .family = "theta_circ",
               .index = 0,
               .convention = RowConvention::unordered_distinct,
               .citation = std::string("theta_circ_") + bar + "_03(m,n) = sum_k (-1)^k [n]_2k / (2^k k!) C(" +
                           (loops ? "C(n-2k,1)+C(n-2k,2)" : "C(n-2k,2)") + ", m-k)",
               .custom_oracle =
                   [loops](int m, int n, int, const oracle::OracleBudget& budget) {
                       return oracle::count_graphs_without_bare_edges(m, n, loops, false, budget);
                   },
               .printed = Builder::mn([loops](int m, int n) { return theta_circ_03(m, n, loops); })});
        ClassSpec graphs;
        graphs.row_convention = RowConvention::unordered_distinct;
        graphs.forbid_empty_edges = true;
        graphs.uniformity = loops ? Uniformity::at_most : Uniformity::exact;
        graphs.uniformity_k = 2;
        graphs.require_cover = true;
        graphs.require_t0 = true;
        b.add({.id = "theta_circ_" + bar + "_13",
               .family = "theta_circ",
               .index = 1,
               .convention = RowConvention::unordered_distinct,
               .t0 = true,
               .citation = "theta_circ_" + bar + "_13(m,n) = sum_i (-1)^i C(n,i) theta_circ_" + bar + "_03(m,n-i)",
               .spec = graphs.normalized(),
               .printed = Builder::mn([loops](int m, int n) { return theta_circ_13(m, n, loops); })});
        ClassSpec covers;
        covers.row_convention = RowConvention::unordered_distinct;
        covers.forbid_empty_edges = true;
        covers.require_t0 = true;
        covers.vertex_degree = loops ? VertexDegree::at_most_cover : VertexDegree::exact_cover;
        covers.degree_k = 2;
        b.add({.id = "beta_" + bar + "_star_13",
               .family = "beta_" + bar,
               .index = 1,
               .convention = RowConvention::unordered_distinct,
               .t0 = true,
               .citation = "beta_" + bar + "*_13(m,n,2) = (n!/m!) theta_circ_" + bar + "_13(n,m)",
               .spec = covers,
               .printed = Builder::mn([loops](int m, int n) { return beta_two_cover_star(m, n, loops); })});
    }
}

inline bool omega_has_printed_gap(int i, RowConvention c) {
    const bool sum_convention = c == RowConvention::ordered || c == RowConvention::unordered;
    return (i == 0 || i == 2) && sum_convention;
}

inline void add_omega(Builder& b) {
    for (RowConvention c : all_conventions)
        for (int i = 0; i < 8; ++i) {
            const std::string ic = std::to_string(i) + cstr(c);
            ClassSpec s = column_spec(i & 3, c);
            s.require_connected = true;
            if (i >= 4) s.forbid_intersecting = true;
            ClassEntry e{.id = "omega_" + ic, .family = "omega", .index = i, .convention = c, .spec = s};
            if (i == 1)
                e.citation = "omega_1" + cstr(c) + "(m,n) = lambda(2^n-1,m) - sum_i sum_j nu(m,i) C(n-1,j-1) "
                                                   "lambda(2^(n-j)-1,m-i) omega_1" + cstr(c) + "(i,j)";
            else if (i == 0)
                e.citation = "omega_0k(m,n) = sum_{i<m} nu(m,i) omega_1k(m-i,n); omega_0k(0,1) = 1, omega_0k(1,1) = 2";
            else if (i < 4)
                e.citation = "omega_" + ic + "(m,n) = omega_" + std::to_string(i - 2) + cstr(c) +
                             "(m,n) - sum_i nu(m,i) alpha_" + ic + "(m-i,n)";
            else
                e.citation = "omega_" + ic + "(m,n) = omega_" + std::to_string(i - 4) + cstr(c) +
                             "(m,n) - sum_i (-1)^i C(n,i) beta_" + std::to_string(i < 6 ? 0 : 2) + cstr(c) +
                             "(m,n-i); beta(m,0) stipulated";
            e.printed = Builder::mn([=](int m, int n) { return omega(i, c, m, n, Reading::printed); });
            if (omega_has_printed_gap(i, c)) {
                e.status = ErrataStatus::convention_gap;
                e.errata_note = "the edge-multiplicity sum must include all m edges when empty edges repeat";
            } else if (i >= 4) {
                e.status = ErrataStatus::confirmed_typo;
                e.errata_note = "the cover sieve enters with a plus sign, with beta_0(m,0) = lambda(1,m), beta_2(m,0) = 0";
            }
            if (e.status != ErrataStatus::none)
                e.corrected = Builder::mn([=](int m, int n) { return omega(i, c, m, n, Reading::corrected); });
            const ErrataStatus base_status = e.status;
            b.add(std::move(e));

            ClassEntry star{.id = "omega_star_" + ic,
                            .family = "omega",
                            .index = i,
                            .convention = c,
                            .t0 = true,
                            .citation = "omega*_" + ic + "(m,n) = sum_i s(n,i) omega_" + ic + "(m,i)",
                            .spec = with_t0(s)};
            star.printed = Builder::mn([=](int m, int n) { return omega_star(i, c, m, n, Reading::printed); });
            star.status = base_status;
            if (base_status == ErrataStatus::none && i % 2 == 0) {
                star.status = ErrataStatus::convention_gap;
                star.errata_note = "empty-row matrices collapse to the connected one-vertex case";
            } else if (base_status != ErrataStatus::none) {
                star.errata_note = "inherits the correction of omega_" + ic;
            }
            if (star.status != ErrataStatus::none)
                star.corrected = Builder::mn([=](int m, int n) { return omega_star(i, c, m, n, Reading::corrected); });
            b.add(std::move(star));
        }
    for (Shape shape : {Shape::uniform, Shape::bounded})
        for (RowConvention s : all_conventions) {
            const bool bounded = shape == Shape::bounded;
            const std::string id = bounded ? "omega_bbar_star_1" + cstr(s) : "omega_bar_star_0" + cstr(s);
            const std::string d = bounded ? "omega_bbar*_1s" : "omega_bar*_0s";
            const std::string t = bounded ? "theta_bar*" : "theta*";
            ClassSpec spec = with_t0(shaped(column_spec(0, s), shape));
            spec.require_connected = true;
            b.add({.id = id,
                   .family = bounded ? "omega_bbar" : "omega_bar",
                   .index = bounded ? 1 : 0,
                   .convention = s,
                   .t0 = true,
                   .citation = d + "(m,n,k) = " + t + "_0s(m,n,k) - " + t + "_1s(m,n-1,k) - sum_i sum_j nu_k(m,i) C(n-1,j-1) " +
                               (bounded ? t + "_1s" : t + "_0s") + "(m-i,n-j,k) " + d + "(i,j,k)",
                   .needs_k = true,
                   .spec = spec.normalized(),
                   .printed = [=](int m, int n, int k) { return omega_uniform_star(shape, s, m, n, k, Reading::printed); },
                   .corrected = [=](int m, int n,
                                    int k) { return omega_uniform_star(shape, s, m, n, k, Reading::corrected); },
                   .status = ErrataStatus::confirmed_typo,
                   .errata_note = bounded ? "the weight is nu_s and the remainder is the plain T0 count with (0,a) = [a = 1]"
                                          : "the weight is nu_s and theta*_0s(0,a,k) = 0 for a > 1"});
        }
}

inline std::vector<ClassEntry> build_registry() {
    Builder b;
    add_alpha(b);
    add_beta(b);
    add_mu(b);
    add_theta(b);
    add_theta_star(b);
    add_two_covers(b);
    add_omega(b);
    return std::move(b.entries);
}

}  // namespace detail

inline const std::vector<ClassEntry>& registry() {
    static const std::vector<ClassEntry> entries = detail::build_registry();
    return entries;
}

inline const ClassEntry& resolve_class(const std::string& id) {
    static const std::map<std::string, const ClassEntry*> index = [] {
        std::map<std::string, const ClassEntry*> m;
        for (const auto& e : registry()) m.emplace(e.id, &e);
        return m;
    }();
    auto it = index.find(id);
    if (it == index.end()) throw UnknownClass(id);
    return *it->second;
}

}  // namespace t0enum::catalog
