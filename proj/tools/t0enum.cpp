#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "t0enum/verify.hpp"

using namespace t0enum;
using nlohmann::json;

namespace {

enum Exit { ok = 0, mismatch = 1, bad_args = 2, unknown_class = 3, budget = 4 };

struct Range {
    int lo = 1;
    int hi = 4;
};

Range parse_range(const std::string& text) {
    static const std::regex pattern(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern)) throw std::invalid_argument("bad range '" + text + "', expected a..b");
    Range r;
    r.lo = std::stoi(match[1]);
    r.hi = match[2].matched ? std::stoi(match[2]) : r.lo;
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

std::string k_text(const std::optional<int>& k) { return k ? std::to_string(*k) : "-"; }

json k_json(const std::optional<int>& k) { return k ? json(*k) : json(nullptr); }

const ClassEntry& formula_class(const std::string& id, const std::optional<int>& k) {
    const ClassEntry& e = catalog::resolve_class(id);
    if (e.oracle_only()) throw OracleOnlyClass(id);
    if (e.needs_k && !k) throw MissingParameter("class " + id + " needs --k");
    return e;
}

Reading reading_of(bool corrected) { return corrected ? Reading::corrected : Reading::printed; }

struct TableArgs {
    std::string class_id;
    std::string m = "1..4";
    std::string n = "1..4";
    std::optional<int> k;
    std::string format = "tsv";
    bool corrected = false;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    const Range mr = parse_range(a.m), nr = parse_range(a.n);
    if (mr.lo < 0 || nr.lo < 0) throw std::invalid_argument("ranges must be non-negative");
    const ClassEntry& e = formula_class(a.class_id, a.k);
    const Reading r = reading_of(a.corrected);
    std::vector<std::vector<Count>> grid;
    for (int m = mr.lo; m <= mr.hi; ++m) {
        grid.emplace_back();
        for (int n = nr.lo; n <= nr.hi; ++n) grid.back().push_back(e.evaluate(m, n, a.k, r));
    }
    if (a.format == "json") {
        json j{{"class_id", e.id}, {"citation", e.citation}, {"k", k_json(a.k)},
               {"reading", a.corrected ? "corrected" : "printed"}};
        json rows = json::array();
        for (int m = mr.lo; m <= mr.hi; ++m)
            for (int n = nr.lo; n <= nr.hi; ++n)
                rows.push_back({{"m", m}, {"n", n}, {"value", grid[m - mr.lo][n - nr.lo].str()}});
        j["cells"] = rows;
        out << j.dump(2) << '\n';
        return ok;
    }
    const char sep = a.format == "csv" ? ',' : '\t';
    auto quoted = [&](const std::string& s) {
        if (sep != ',') return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    out << "class_id" << sep << quoted(e.id) << sep << "citation" << sep << quoted(e.citation) << sep << "k" << sep
        << k_text(a.k) << '\n';
    out << "m\\n";
    for (int n = nr.lo; n <= nr.hi; ++n) out << sep << n;
    out << '\n';
    for (int m = mr.lo; m <= mr.hi; ++m) {
        out << m;
        for (const auto& v : grid[m - mr.lo]) out << sep << v;
        out << '\n';
    }
    return ok;
}

struct OracleArgs {
    std::string class_id;
    int m = 1;
    int n = 1;
    std::optional<int> k;
    std::optional<long long> max_cells;
    std::optional<long long> max_universe;
};

oracle::OracleBudget budget_from(const std::optional<long long>& cells, const std::optional<long long>& universe) {
    oracle::OracleBudget b = oracle::OracleBudget::from_env();
    if (cells) b.max_cells = *cells;
    if (universe) b.max_universe = *universe;
    if (b.max_cells <= 0 || b.max_universe <= 0) throw std::invalid_argument("budget limits must be positive");
    return b;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
    const ClassEntry& e = catalog::resolve_class(a.class_id);
    if (e.needs_k && !a.k) throw MissingParameter("class " + e.id + " needs --k");
    out << oracle_value(e, a.m, a.n, e.needs_k ? a.k : std::nullopt, budget_from(a.max_cells, a.max_universe)) << '\n';
    return ok;
}

struct VerifyArgs {
    std::string class_id;
    bool all = false;
    GridOptions grid;
    std::optional<std::string> emit_errata;
    bool corrected = false;
    std::optional<long long> max_cells;
    std::optional<long long> max_universe;
};

std::string cell_text(const ErrataRecord& r) {
    return "(" + std::to_string(r.m) + "," + std::to_string(r.n) + (r.k ? "," + std::to_string(*r.k) : "") + ")";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.all == !a.class_id.empty()) throw std::invalid_argument("give exactly one of --class or --all");
    if (a.grid.m_max < 1 || a.grid.n_max < 1 || a.grid.m_max_unordered < 1)
        throw std::invalid_argument("grid bounds must be positive");
    const auto budget = budget_from(a.max_cells, a.max_universe);
    std::vector<const ClassEntry*> targets;
    if (a.all) {
        for (const auto& e : catalog::registry()) targets.push_back(&e);
    } else {
        const ClassEntry& e = catalog::resolve_class(a.class_id);
        if (e.oracle_only()) throw OracleOnlyClass(e.id);
        targets.push_back(&e);
    }
    const Reading reading = reading_of(a.corrected);
    std::vector<ErrataRecord> errata;
    int verified = 0, with_errata = 0, oracle_only = 0, cells = 0, skipped = 0;
    for (const ClassEntry* e : targets) {
        VerifyReport rep = verify_grid(*e, a.grid, budget, reading);
        cells += rep.cells_checked;
        skipped += rep.cells_skipped;
        if (rep.oracle_only) {
            ++oracle_only;
            out << "oracle-only " << e->id << '\n';
            continue;
        }
        if (rep.errata.empty()) {
            ++verified;
            out << "verified    " << e->id << " (" << rep.cells_checked << " cells";
            if (rep.cells_skipped) out << ", " << rep.cells_skipped << " skipped";
            out << ")\n";
            continue;
        }
        ++with_errata;
        out << "MISMATCH    " << e->id << " [" << catalog::to_string(rep.errata.front().status) << "] "
            << rep.errata.size() << " of " << rep.cells_checked << " cells\n";
        for (const auto& r : rep.errata)
            out << "    " << cell_text(r) << " formula " << r.formula_value << " oracle " << r.oracle_value << '\n';
        errata.insert(errata.end(), rep.errata.begin(), rep.errata.end());
    }
    out << "classes " << targets.size() << ": " << verified << " verified, " << with_errata << " with errata, "
        << oracle_only << " oracle-only; " << cells << " cells checked, " << skipped << " skipped\n";
    if (a.emit_errata) {
        std::ofstream f(*a.emit_errata);
        if (!f) throw std::invalid_argument("cannot write " + *a.emit_errata);
        for (const auto& r : errata) {
            json j{{"class_id", r.class_id},
                   {"m", r.m},
                   {"n", r.n},
                   {"k", k_json(r.k)},
                   {"formula_value", r.formula_value.str()},
                   {"oracle_value", r.oracle_value.str()},
                   {"paper_ref_text", r.paper_ref_text},
                   {"status", catalog::to_string(r.status)}};
            f << j.dump() << '\n';
        }
    }
    return errata.empty() ? ok : mismatch;
}

struct SequenceArgs {
    std::string class_id;
    std::string order = "antidiagonal";
    long long limit = 20;
    std::optional<int> k;
    int width = 10;
    bool corrected = false;
};

int cmd_sequence(const SequenceArgs& a, std::ostream& out) {
    if (a.limit < 0) throw std::invalid_argument("--limit must be non-negative");
    if (a.width < 1) throw std::invalid_argument("--width must be positive");
    const ClassEntry& e = formula_class(a.class_id, a.k);
    const Reading r = reading_of(a.corrected);
    long long index = 1;
    auto emit = [&](int m, int n) {
        out << index++ << ' ' << e.evaluate(m, n, a.k, r) << '\n';
        return index <= a.limit;
    };
    if (a.limit == 0) return ok;
    if (a.order == "antidiagonal") {
        for (int d = 2;; ++d)
            for (int m = 1; m <= d - 1; ++m)
                if (!emit(m, d - m)) return ok;
    }
    for (int m = 1;; ++m)
        for (int n = 1; n <= a.width; ++n)
            if (!emit(m, n)) return ok;
}

struct EgfArgs {
    int family = 2;
    int order_x = 5;
    int order_y = 5;
    int max_order = 6;
    std::string corruption;
};

int cmd_egf(const EgfArgs& a, std::ostream& out) {
    if (a.family < 1 || a.family > 4) throw std::invalid_argument("--family must be 1..4");
    if (a.order_x < 1 || a.order_y < 0) throw std::invalid_argument("orders must be positive");
    if (a.order_x > a.max_order || a.order_y > a.max_order)
        throw std::invalid_argument("orders exceed --max-order " + std::to_string(a.max_order));
    const RowConvention c = convention_from_index(a.family);
    const std::string f = std::to_string(a.family);
    auto alpha = transforms::CountTable::tabulate(
        "alpha_1" + f, "formula", [&](int m, int n) { return catalog::alpha(1, c, m, n); }, 0, a.order_y, 0, a.order_x);
    auto omega = transforms::CountTable::tabulate(
        "omega_1" + f, "formula", [&](int m, int n) { return catalog::omega1(c, m, n); }, 0, a.order_y, 1, a.order_x);
    if (!a.corruption.empty()) {
        static const std::regex pattern(R"(^(\d+),(\d+)$)");
        std::smatch match;
        if (!std::regex_match(a.corruption, match, pattern)) throw std::invalid_argument("--inject-corruption wants M,N");
        const int m = std::stoi(match[1]), n = std::stoi(match[2]);
        omega.set(m, n, omega.at(m, n) + 1);
    }
    if (auto bad = transforms::egf_log_mismatch(alpha, omega, c, a.order_x, a.order_y)) {
        out << "mismatch at (m,n) = (" << bad->m << "," << bad->n << "): 1 + ln A gives " << bad->expected
            << ", omega_1" << f << " gives " << bad->actual << '\n';
        return mismatch;
    }
    out << "ok: Omega_1" << f << " = 1 + ln A_1" << f << " through x^" << a.order_x << " y^" << a.order_y << '\n';
    return ok;
}

int cmd_manifest(std::ostream& out) {
    json list = json::array();
    for (const auto& e : catalog::registry()) {
        json j{{"id", e.id},
               {"family", e.family},
               {"index", e.index},
               {"convention", index_of(e.convention)},
               {"t0", e.t0},
               {"needs_k", e.needs_k},
               {"citation", e.citation},
               {"class_spec", e.spec_text()},
               {"oracle_only", e.oracle_only()},
               {"errata_status", catalog::to_string(e.status)}};
        if (!e.errata_note.empty()) j["errata_note"] = e.errata_note;
        list.push_back(j);
    }
    out << list.dump(2) << '\n';
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of labelled hypergraphs, with and without the T0 property"};
    app.require_subcommand(1);

    TableArgs table;
    auto* t = app.add_subcommand("table", "Print a formula table over an (m,n) grid");
    t->add_option("--class", table.class_id, "Class id")->required();
    t->add_option("--m", table.m, "Edge range a..b")->capture_default_str();
    t->add_option("--n", table.n, "Vertex range a..b")->capture_default_str();
    t->add_option("--k", table.k, "Uniformity or degree parameter");
    t->add_option("--format", table.format)->check(CLI::IsMember({"tsv", "csv", "json"}))->capture_default_str();
    t->add_flag("--errata-corrected", table.corrected, "Use the corrected reading of erroneous formulas");

    OracleArgs orc;
    auto* o = app.add_subcommand("oracle", "Brute-force count of one cell");
    o->add_option("--class", orc.class_id, "Class id")->required();
    o->add_option("--m", orc.m)->required();
    o->add_option("--n", orc.n)->required();
    o->add_option("--k", orc.k);
    o->add_option("--max-cells", orc.max_cells, "Cap on m*n for ordered enumeration");
    o->add_option("--max-universe", orc.max_universe, "Cap on 2^n for unordered enumeration");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Compare formulas with the oracle");
    v->add_option("--class", ver.class_id, "Class id");
    v->add_flag("--all", ver.all, "Every registered class");
    v->add_option("--m-max", ver.grid.m_max)->capture_default_str();
    v->add_option("--n-max", ver.grid.n_max)->capture_default_str();
    v->add_option("--m-max-unordered", ver.grid.m_max_unordered)->capture_default_str();
    v->add_option("--k", ver.grid.k, "Only this k (default 1..3 with k <= n)");
    v->add_option("--emit-errata", ver.emit_errata, "Write one JSON record per disagreement");
    v->add_flag("--errata-corrected", ver.corrected);
    v->add_option("--max-cells", ver.max_cells);
    v->add_option("--max-universe", ver.max_universe);

    SequenceArgs seq;
    auto* s = app.add_subcommand("sequence", "Flatten a table into index/value lines");
    s->add_option("--class", seq.class_id)->required();
    s->add_option("--order", seq.order)->check(CLI::IsMember({"antidiagonal", "row"}))->capture_default_str();
    s->add_option("--limit", seq.limit)->capture_default_str();
    s->add_option("--k", seq.k);
    s->add_option("--width", seq.width, "Row length for row order")->capture_default_str();
    s->add_flag("--errata-corrected", seq.corrected);

    EgfArgs egf;
    auto* g = app.add_subcommand("egf-check", "Check Omega = 1 + ln A coefficientwise");
    g->add_option("--family", egf.family)->capture_default_str();
    g->add_option("--order-x", egf.order_x)->capture_default_str();
    g->add_option("--order-y", egf.order_y)->capture_default_str();
    g->add_option("--max-order", egf.max_order)->capture_default_str();
    g->add_option("--inject-corruption", egf.corruption)->group("");

    auto* man = app.add_subcommand("manifest", "Print the class manifest as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_args;
    }

    std::ostringstream out;
    int code = ok;
    try {
        if (*t) code = cmd_table(table, out);
        if (*o) code = cmd_oracle(orc, out);
        if (*v) code = cmd_verify(ver, out);
        if (*s) code = cmd_sequence(seq, out);
        if (*g) code = cmd_egf(egf, out);
        if (*man) code = cmd_manifest(out);
    } catch (const UnknownClass& e) {
        std::cerr << e.what() << '\n';
        return unknown_class;
    } catch (const OracleOnlyClass& e) {
        std::cerr << e.what() << '\n';
        return unknown_class;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << '\n';
        return budget;
    } catch (const MissingParameter& e) {
        std::cerr << e.what() << '\n';
        return bad_args;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return bad_args;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << '\n';
        return bad_args;
    }
    std::cout << out.str();
    return code;
}
