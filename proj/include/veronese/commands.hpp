// Command implementations behind the `veronese` tool.  Each returns the
// printed text, the JSON report and an exit code so they can be tested
// without spawning a process.
#pragma once

#include "cycles.hpp"
#include "glaction.hpp"
#include "koszul.hpp"
#include "matching.hpp"
#include "partitions.hpp"

#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace veronese {

struct RunConfig {
    int n = 2;
    std::uint32_t characteristic = 0;
    std::optional<int> imax;
    std::optional<int> jmax;
    int t = 1;
    std::uint64_t seed = 1;
    bool json = false;
    std::string out;
    bool torsion = false;
    bool check_cycle = false;

    void validate() const
    {
        if (n < 1 || n > kMaxVars) throw std::invalid_argument("--n must be between 1 and " + std::to_string(kMaxVars));
        Field::of_characteristic(characteristic);
        if (imax && *imax < 0) throw std::invalid_argument("--imax must be >= 0");
        if (jmax && *jmax < 0) throw std::invalid_argument("--jmax must be >= 0");
        if (t < 0) throw std::invalid_argument("--t must be >= 0");
    }

    Field field() const { return Field::of_characteristic(characteristic); }

    nlohmann::json to_json() const
    {
        nlohmann::json j = {{"n", n}, {"char", characteristic}, {"t", t}, {"seed", seed}, {"torsion", torsion}};
        j["imax"] = imax ? nlohmann::json(*imax) : nlohmann::json(nullptr);
        j["jmax"] = jmax ? nlohmann::json(*jmax) : nlohmann::json(nullptr);
        return j;
    }
};

struct CommandResult {
    std::string text;
    json report;
    int exit_code = 0;

    /// What gets printed: the JSON report or the text form.
    std::string output(bool as_json) const { return as_json ? report.dump(2) + "\n" : text; }
};

inline json report_json(const std::string& command, const RunConfig& cfg, const Report& r)
{
    return {{"command", command}, {"config", cfg.to_json()}, {"checks", r.checks_json()}, {"failures", r.failures()}};
}

inline std::string report_text(const Report& r)
{
    std::ostringstream os;
    for (const auto& c : r.checks()) {
        const char* tag = c.experiment ? "info" : c.pass ? "pass" : "FAIL";
        os << tag << "  " << c.name << "  got=" << c.got.dump();
        if (!c.experiment) os << "  expected=" << c.expected.dump();
        os << "\n";
    }
    os << r.failures() << " failure" << (r.failures() == 1 ? "" : "s") << " in " << r.checks().size() << " checks\n";
    return os.str();
}

inline CommandResult from_report(const std::string& command, const RunConfig& cfg, const Report& r)
{
    return {report_text(r), report_json(command, cfg, r), r.ok() ? 0 : 1};
}

// ---------------------------------------------------------------------------
// betti

struct BettiCell {
    int i;
    int j;
    Index dim;
    Integer predicted;
    std::vector<Partition> lambdas;
    bool match() const { return Integer(static_cast<unsigned long>(dim)) == predicted; }
};

/// Cells 0 <= i <= imax, 2i <= j <= jmax; empty when either bound is negative.
inline std::vector<BettiCell> betti_table(KoszulComplex& kc, int imax, int jmax)
{
    std::vector<BettiCell> out;
    for (int i = 0; i <= std::min(imax, kc.top_degree()); ++i)
        for (int j = 2 * i; j <= jmax; ++j) {
            BettiCell c{i, j, kc.homology_dim(i, j), 0, self_conjugate_enum(kc.n(), i, j)};
            for (const auto& l : c.lambdas) c.predicted += schur_dim(l, kc.n());
            out.push_back(std::move(c));
        }
    return out;
}

inline CommandResult cmd_betti(const RunConfig& cfg)
{
    KoszulComplex kc(cfg.n, cfg.field());
    const int jmax = cfg.jmax.value_or(8);
    auto cells = betti_table(kc, cfg.imax.value_or(jmax / 2), jmax);

    Report r("betti");
    std::ostringstream os;
    os << std::left << std::setw(4) << "i" << std::setw(4) << "j" << std::setw(8) << "dim" << std::setw(11)
       << "predicted" << std::setw(7) << "match"
       << "lambdas\n";
    for (const auto& c : cells) {
        json lams = json::array();
        std::string lam_text;
        for (const auto& l : c.lambdas) {
            lams.push_back(format_partition(l));
            lam_text += (lam_text.empty() ? "" : " ") + std::string("(") + (l.empty() ? "" : format_partition(l)) + ")";
        }
        const std::string name = "H_" + std::to_string(c.i) + "_" + std::to_string(c.j);
        const json in = {{"i", c.i}, {"j", c.j}, {"lambdas", lams}};
        if (kc.field().is_rational())
            r.add(name, in, c.predicted.get_str(), std::to_string(c.dim), c.match());
        else
            r.add_experiment(name, in, {{"dim", c.dim}, {"predicted_char0", c.predicted.get_str()}});
        os << std::setw(4) << c.i << std::setw(4) << c.j << std::setw(8) << c.dim << std::setw(11)
           << c.predicted.get_str() << std::setw(7) << (c.match() ? "yes" : "no") << lam_text << "\n";
    }
    auto res = from_report("betti", cfg, r);
    res.text = os.str();
    return res;
}

// ---------------------------------------------------------------------------
// verify suites

namespace detail {

inline std::vector<Partition> self_conjugate_up_to(int max_weight, int max_length)
{
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& p : partitions_of(w))
            if (is_self_conjugate(p) && p.length() <= max_length) out.push_back(p);
    return out;
}

inline std::vector<int> random_indices(std::mt19937_64& rng, int len, int n)
{
    std::uniform_int_distribution<int> d(1, n);
    std::vector<int> v(len);
    for (auto& x : v) x = d(rng);
    return v;
}

inline json pair_json(const std::vector<int>& a, const std::vector<int>& b) { return {{"a", a}, {"b", b}}; }

} // namespace detail

/// Exhaustive when n^(2t+1) is small, plus seeded random cases.
inline Report verify_garnir(int n, int t, std::uint64_t seed, const Field& field, int random_cases = 50)
{
    Report r("garnir");
    if (t < 1) throw std::invalid_argument("Garnir relations need --t >= 1");
    const int len = 2 * t + 1;
    double total = 1;
    for (int k = 0; k < len; ++k) total *= n;
    if (total <= 20000) {
        std::vector<int> idx(len, 1);
        std::size_t cases = 0;
        json bad = json::array();
        while (true) {
            std::vector<int> a(idx.begin(), idx.begin() + t + 2), b(idx.begin() + t + 2, idx.end());
            ++cases;
            if (!garnir_sum(a, b, n, field).is_zero()) bad.push_back(detail::pair_json(a, b));
            int pos = 0;
            while (pos < len && ++idx[pos] > n) idx[pos++] = 1;
            if (pos == len) break;
        }
        r.add("exhaustive", {{"n", n}, {"t", t}, {"cases", cases}}, json::array(), bad, bad.empty());
    }
    std::mt19937_64 rng(seed);
    json bad = json::array();
    for (int k = 0; k < random_cases; ++k) {
        auto a = detail::random_indices(rng, t + 2, n), b = detail::random_indices(rng, t - 1, n);
        if (!garnir_sum(a, b, n, field).is_zero()) bad.push_back(detail::pair_json(a, b));
    }
    r.add("random", {{"n", n}, {"t", t}, {"seed", seed}, {"cases", random_cases}}, json::array(), bad, bad.empty());
    return r;
}

/// Every pair with a strictly and b weakly increasing and omega > 0, for 1 <= t' <= t.
inline Report verify_straighten(int n, int t, const Field& field)
{
    Report r("straighten");
    for (int tt = 1; tt <= t; ++tt) {
        std::size_t cases = 0;
        json bad = json::array();
        int max_depth = 0;
        // a: strictly increasing (t+1)-subsets, b: weakly increasing t-tuples
        std::vector<int> a, b;
        auto rec_b = [&](auto&& self, int lo) -> void {
            if (static_cast<int>(b.size()) == tt) {
                int w = omega(a, b);
                if (w == 0) return;
                ++cases;
                auto s = straighten(a, b, n, field);
                max_depth = std::max(max_depth, s.depth);
                bool ok = s.depth <= w && expand(s.coefficients, n, field) == z_cycle(a, b, n, field);
                for (const auto& [p, c] : s.coefficients) ok = ok && omega(p.a, p.b) == 0;
                if (!ok) bad.push_back(detail::pair_json(a, b));
                return;
            }
            for (int v = lo; v <= n; ++v) {
                b.push_back(v);
                self(self, v);
                b.pop_back();
            }
        };
        auto rec_a = [&](auto&& self, int lo) -> void {
            if (static_cast<int>(a.size()) == tt + 1) {
                rec_b(rec_b, 1);
                return;
            }
            for (int v = lo; v <= n; ++v) {
                a.push_back(v);
                self(self, v + 1);
                a.pop_back();
            }
        };
        rec_a(rec_a, 1);
        r.add("t=" + std::to_string(tt), {{"n", n}, {"t", tt}, {"cases", cases}, {"max_depth", max_depth}},
              json::array(), bad, bad.empty());
    }
    return r;
}

inline Report verify_nonzero_products(int n, const Field& field)
{
    Report r("nonzero-products");
    KoszulComplex kc(n, field);
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int k = 0; k < n; ++k)
            if (mask >> k & 1) s.push_back(k);
        bool nz = kc.class_is_nonzero(squarefree_Z_product(s, n, field));
        const json in = {{"n", n}, {"S", s}};
        if (field.is_rational())
            r.add("Z" + json(s).dump(), in, true, nz, nz);
        else
            r.add_experiment("Z" + json(s).dump(), in, nz);
    }
    r.merge(squarefree_term_check(n, field));
    return r;
}

inline Report verify_matching(int n, const Field& field, bool torsion)
{
    Report r("matching");
    r.merge(petersen_check());
    auto cx = matching_complex(n);
    for (int d = -1; d <= cx.top_dim(); ++d) {
        auto h = reduced_homology(cx, d, field, torsion);
        json got = {{"rank", h.rank}};
        if (torsion) {
            json tor = json::array();
            for (const auto& f : h.torsion) tor.push_back(f.get_str());
            got["torsion"] = tor;
        }
        r.add_experiment("reduced_H_" + std::to_string(d), {{"n", n}, {"dim", d}, {"char", field.characteristic()}},
                         got);
    }
    Index h51 = reduced_homology(5, 1, field);
    if (field.is_rational()) r.add("petersen_H1", {{"n", 5}, {"dim", 1}}, 6, h51, h51 == 6);
    r.merge(squarefree_slice_compare(n, field));
    return r;
}

inline Report run_suite(const std::string& which, const RunConfig& cfg)
{
    const Field field = cfg.field();
    const int n = cfg.n;
    if (which == "garnir") return verify_garnir(n, std::max(cfg.t, 1), cfg.seed, field);
    if (which == "straighten") return verify_straighten(n, std::max(cfg.t, 1), field);
    if (which == "isotypic") {
        Report r("isotypic");
        KoszulComplex kc(n, field);
        for (const auto& l : detail::self_conjugate_up_to(cfg.jmax.value_or(n * n), n)) r.merge(isotypic_verify(kc, l));
        return r;
    }
    if (which == "decomposition") {
        Report r("decomposition");
        KoszulComplex kc(n, field);
        const int jmax = cfg.jmax.value_or(8);
        for (int j = 0; j <= jmax; ++j)
            for (int i = 0; 2 * i <= j && i <= std::min(cfg.imax.value_or(j), kc.top_degree()); ++i)
                r.merge(decomposition_verify(kc, i, j));
        return r;
    }
    if (which == "strand") {
        Report r("strand");
        KoszulComplex kc(n, field);
        for (int t = 0; t <= cfg.t; ++t) {
            auto sub = strand_span_check(kc, t);
            Report tagged("t=" + std::to_string(t));
            tagged.merge(sub);
            r.merge(tagged);
        }
        return r;
    }
    if (which == "lowest-strand") return lowest_strand_span_check(n, cfg.imax.value_or(3), field);
    if (which == "lr") {
        Report r("lr");
        for (const auto& l : detail::self_conjugate_up_to(cfg.jmax.value_or(12), 1 << 20)) {
            if (l.empty()) continue;
            Report tagged(format_partition(l));
            tagged.merge(lr_selfconjugate_check(l));
            r.merge(tagged);
        }
        return r;
    }
    if (which == "matching") return verify_matching(n, field, cfg.torsion);
    if (which == "char2") return char2_witness();
    if (which == "nonzero-products") return verify_nonzero_products(n, field);
    throw std::invalid_argument("unknown verification '" + which + "'");
}

inline const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> names{"garnir",        "straighten", "isotypic", "decomposition",
                                                "strand",        "lowest-strand", "lr",    "matching",
                                                "char2",         "nonzero-products"};
    return names;
}

inline CommandResult cmd_verify(const RunConfig& cfg, const std::string& which)
{
    return from_report("verify " + which, cfg, run_suite(which, cfg));
}

// ---------------------------------------------------------------------------
// cycle

/// kind is Z (arg i), z (arg "a|b") or product (arg "s1,s2,...").
inline CommandResult cmd_cycle(const RunConfig& cfg, const std::string& kind, const std::string& arg)
{
    const Field field = cfg.field();
    KoszulElement u;
    json spec;
    if (kind == "Z") {
        std::size_t used = 0;
        int i = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument("Z needs an integer index");
        u = hook_cycle(i, cfg.n, field);
        spec = {{"Z", i}};
    } else if (kind == "z") {
        auto p = parse_pair(arg);
        u = z_cycle(p, cfg.n, field);
        spec = {{"z", format_pair(p)}};
    } else if (kind == "product") {
        auto s = detail::parse_index_list(arg);
        u = squarefree_Z_product(s, cfg.n, field);
        spec = {{"product", s}};
    } else {
        throw std::invalid_argument("cycle kind must be Z, z or product");
    }

    Report r("cycle");
    if (cfg.check_cycle) {
        bool cyc = differential(u).is_zero();
        r.add("differential_vanishes", spec, true, cyc, cyc);
    }
    CommandResult res = from_report("cycle " + kind, cfg, r);
    res.report["element"] = to_json(u);
    res.report["text"] = format_element(u);
    if (auto b = u.bidegree()) res.report["bidegree"] = {b->i, b->j};
    res.text = format_element(u) + "\n";
    if (cfg.check_cycle) res.text += report_text(r);
    return res;
}

// ---------------------------------------------------------------------------
// matching export

/// what: faces (JSON), boundary (Matrix Market of d_dim) or homology.
inline CommandResult cmd_matching(const RunConfig& cfg, const std::string& what, int dim)
{
    auto cx = matching_complex(cfg.n);
    CommandResult res;
    res.report = {{"command", "matching " + what}, {"config", cfg.to_json()}, {"checks", json::array()}, {"failures", 0}};
    if (what == "faces") {
        res.report["faces"] = faces_json(cx, cfg.n);
        res.text = res.report["faces"].dump(2) + "\n";
    } else if (what == "boundary") {
        if (dim < 0 || dim > cx.top_dim()) throw std::invalid_argument("no boundary map in that dimension");
        auto m = cx.boundary(dim);
        std::ostringstream os;
        write_matrix_market(os, m);
        res.text = os.str();
        json entries = json::array();
        for (Index c = 0; c < m.cols(); ++c)
            for (const auto& [row, v] : m.column(c).entries()) entries.push_back({row + 1, c + 1, v.get_str()});
        res.report["boundary"] = {{"dim", dim}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
    } else if (what == "homology") {
        Report r("homology");
        std::ostringstream os;
        for (int d = -1; d <= cx.top_dim(); ++d) {
            auto h = reduced_homology(cx, d, cfg.field(), cfg.torsion);
            json got = {{"rank", h.rank}};
            os << "H~_" << d << " rank " << h.rank;
            if (cfg.torsion) {
                json tor = json::array();
                for (const auto& f : h.torsion) {
                    tor.push_back(f.get_str());
                    os << " Z/" << f.get_str();
                }
                got["torsion"] = tor;
            }
            os << "\n";
            r.add_experiment("reduced_H_" + std::to_string(d), {{"n", cfg.n}, {"dim", d}}, got);
        }
        res = from_report("matching homology", cfg, r);
        res.text = os.str();
    } else {
        throw std::invalid_argument("matching subcommand must be faces, boundary or homology");
    }
    return res;
}

} // namespace veronese
