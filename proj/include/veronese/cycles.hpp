// Explicit Koszul cycles: the hook cycles Z_i, the cycles z_{a,b} built from
// linear forms, Garnir relations and straightening onto tableau pairs.
#pragma once

#include "koszul.hpp"
#include "partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace veronese {

/// A linear form sum_k c_k x_k in n variables.
class LinearForm {
  public:
    LinearForm() = default;
    explicit LinearForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

    /// The variable x_i, 1-based.
    static LinearForm variable(int i, int n)
    {
        if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
        LinearForm f(std::vector<Scalar>(n, 0));
        f.coeffs_[i - 1] = 1;
        return f;
    }

    int n() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](int k) const { return coeffs_[k]; }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

  private:
    std::vector<Scalar> coeffs_;
};

inline std::vector<LinearForm> variables(const std::vector<int>& idx, int n)
{
    std::vector<LinearForm> out;
    for (int i : idx) out.push_back(LinearForm::variable(i, n));
    return out;
}

struct CyclePair {
    std::vector<LinearForm> a;
    std::vector<LinearForm> b;

    int t() const { return static_cast<int>(b.size()); }

    void validate(int n) const
    {
        if (a.size() != b.size() + 1) throw std::invalid_argument("a cycle pair needs |a| = |b| + 1");
        for (const auto& f : a)
            if (f.n() != n) throw std::invalid_argument("linear form over the wrong number of variables");
        for (const auto& f : b)
            if (f.n() != n) throw std::invalid_argument("linear form over the wrong number of variables");
    }
};

/// Index form: a strictly increasing, b weakly increasing, a_1 <= b_1.
struct TableauPair {
    std::vector<int> a;
    std::vector<int> b;

    int t() const { return static_cast<int>(b.size()); }
    friend auto operator<=>(const TableauPair&, const TableauPair&) = default;
};

inline std::string format_pair(const std::vector<int>& a, const std::vector<int>& b)
{
    std::ostringstream os;
    os << "z[";
    for (std::size_t k = 0; k < a.size(); ++k) os << (k ? "," : "") << a[k];
    os << "|";
    for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
    os << "]";
    return os.str();
}

inline std::string format_pair(const TableauPair& p) { return format_pair(p.a, p.b); }

namespace detail {

inline std::vector<int> parse_index_list(const std::string& text)
{
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad index '" + item + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace detail

/// Accepts `z[1,2|2]` or the bare `1,2|2`.
inline TableauPair parse_pair(std::string text)
{
    if (text.rfind("z[", 0) == 0) {
        if (text.back() != ']') throw std::invalid_argument("unterminated cycle pair: " + text);
        text = text.substr(2, text.size() - 3);
    }
    auto bar = text.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("cycle pair needs a '|': " + text);
    TableauPair p{detail::parse_index_list(text.substr(0, bar)), detail::parse_index_list(text.substr(bar + 1))};
    if (p.a.size() != p.b.size() + 1) throw std::invalid_argument("cycle pair needs |a| = |b| + 1: " + text);
    return p;
}

namespace detail {

inline int permutation_sign(const std::vector<int>& perm)
{
    int inversions = 0;
    for (std::size_t x = 0; x < perm.size(); ++x)
        for (std::size_t y = x + 1; y < perm.size(); ++y) inversions += perm[x] > perm[y];
    return inversions % 2 ? -1 : 1;
}

} // namespace detail

/// sum_sigma sgn(sigma) a_sigma(t+1) (x) b_1 a_sigma(1) ^ ... ^ b_t a_sigma(t).
inline KoszulElement z_cycle(const CyclePair& p, int n, const Field& field)
{
    p.validate(n);
    const int t = p.t();
    const auto& qt = quad_table(n);

    // products b_k a_m expanded once: (quad index, coefficient) lists
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> quad_terms(t);
    for (int k = 0; k < t; ++k) {
        quad_terms[k].resize(t + 1);
        for (int m = 0; m <= t; ++m) {
            std::map<int, Scalar> acc;
            for (int x = 0; x < n; ++x) {
                if (p.b[k][x] == 0) continue;
                for (int y = 0; y < n; ++y)
                    if (p.a[m][y] != 0) acc[qt.index(std::min(x, y) + 1, std::max(x, y) + 1)] += p.b[k][x] * p.a[m][y];
            }
            for (const auto& [q, c] : acc)
                if (c != 0) quad_terms[k][m].emplace_back(q, c);
        }
    }

    KoszulElement out(n, field);
    std::vector<int> perm(t + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const Scalar sgn = detail::permutation_sign(perm);
        const LinearForm& lead = p.a[perm[t]];
        auto rec = [&](auto&& self, int k, Wedge w, const Scalar& c) -> void {
            if (k == t) {
                for (int x = 0; x < n; ++x) {
                    if (lead[x] == 0) continue;
                    TermKey key;
                    key.mono[x] = 1;
                    key.wedge = w;
                    out.add_term(key, c * lead[x]);
                }
                return;
            }
            for (const auto& [q, cq] : quad_terms[k][perm[k]]) {
                Wedge bit = Wedge(1) << q;
                if (w & bit) continue;
                // appending on the right passes every quad already above q
                int sign = count_above(w, q) % 2 ? -1 : 1;
                self(self, k + 1, w | bit, c * cq * sign);
            }
        };
        rec(rec, 0, 0, sgn);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline KoszulElement z_cycle(const std::vector<int>& a, const std::vector<int>& b, int n, const Field& field)
{
    return z_cycle(CyclePair{variables(a, n), variables(b, n)}, n, field);
}

inline KoszulElement z_cycle(const TableauPair& p, int n, const Field& field) { return z_cycle(p.a, p.b, n, field); }

/// Z_i = sum_{j=1}^{i+1} (-1)^(j-1) x_j (x) wedge_{k != j} x_k x_{i+1}.
inline KoszulElement hook_cycle(int i, int n, const Field& field)
{
    if (i < 0 || i >= n) throw std::invalid_argument("hook cycle Z_i needs 0 <= i < n");
    KoszulElement out(n, field);
    for (int j = 1; j <= i + 1; ++j) {
        std::vector<int> e(n, 0);
        e[j - 1] = 1;
        std::vector<QuadMonomial> quads;
        for (int k = 1; k <= i + 1; ++k)
            if (k != j) quads.push_back({k, i + 1});
        out += KoszulElement::monomial(n, field, j % 2 ? 1 : -1, e, quads);
    }
    return out;
}

/// Product of Z_s over s in S, taken in increasing order.
inline KoszulElement squarefree_Z_product(std::vector<int> subset, int n, const Field& field)
{
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw std::invalid_argument("subset has repeated entries");
    KoszulElement out = KoszulElement::one(n, field);
    for (int s : subset) out = out * hook_cycle(s, n, field);
    return out;
}

namespace detail {

inline bool has_square_quad(Wedge w, int n)
{
    const auto& qt = quad_table(n);
    for (int k : wedge_indices(w))
        if (qt.quad(k).a == qt.quad(k).b) return true;
    return false;
}

} // namespace detail

/**
 * The full product Z_0 ... Z_{n-1} has a single term T = x_1..x_n (x) (all
 * x_a x_b, a < b) that no boundary can touch, which makes its class nonzero.
 */
inline Report squarefree_term_check(int n, const Field& field = Field::rationals())
{
    Report report("squarefree-term");
    const auto& qt = quad_table(n);

    for (int i = 0; i < n; ++i) {
        auto z = hook_cycle(i, n, field);
        int squarefree = 0;
        for (const auto& [k, c] : z.terms()) squarefree += !detail::has_square_quad(k.wedge, n);
        report.add("Z_" + std::to_string(i) + "_single_squarefree_term", {{"n", n}, {"i", i}}, 1, squarefree,
                   squarefree == 1);
    }

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto prod = squarefree_Z_product(all, n, field);
    TermKey T;
    for (int k = 0; k < n; ++k) T.mono[k] = 1;
    for (int k = 0; k < qt.size(); ++k)
        if (qt.quad(k).a != qt.quad(k).b) T.wedge |= Wedge(1) << k;
    Scalar c = prod.coefficient(T);
    report.add("product_contains_T", {{"n", n}, {"T", format_term(T, 1, n)}}, "+-1", to_string(c),
               c == 1 || c == field.normalize(-1));
    report.add("product_is_cycle", {{"n", n}}, true, differential(prod).is_zero(), differential(prod).is_zero());

    // every basis element one homological degree up in T's multidegree
    const int i = wedge_size(T.wedge);
    std::size_t touching = 0, candidates = 0;
    for (const auto& key : component_basis(n, i + 1, multidegree(T, n))) {
        ++candidates;
        for (const auto& [t, sign] : detail::differential_terms(key, n))
            if (t == T) ++touching;
    }
    report.add("no_preimage_touches_T", {{"n", n}, {"candidates", candidates}}, 0, touching, touching == 0);
    return report;
}

/// sum_{j=1}^{t+2} (-1)^j z_{a^(j), (a_j, b_2..b_t)} with t = |a| - 2.
inline KoszulElement garnir_sum(const std::vector<int>& a, const std::vector<int>& btail, int n, const Field& field)
{
    const int t = static_cast<int>(a.size()) - 2;
    if (t < 1) throw std::invalid_argument("Garnir relations need t >= 1");
    if (static_cast<int>(btail.size()) != t - 1) throw std::invalid_argument("Garnir relations need |b| = t - 1");
    KoszulElement out(n, field);
    for (int j = 1; j <= t + 2; ++j) {
        std::vector<int> aj(a);
        aj.erase(aj.begin() + (j - 1));
        std::vector<int> bj{a[j - 1]};
        bj.insert(bj.end(), btail.begin(), btail.end());
        out += Scalar(j % 2 ? -1 : 1) * z_cycle(aj, bj, n, field);
    }
    return out;
}

inline std::vector<TableauPair> tableau_generators(int n, int t)
{
    std::vector<TableauPair> out;
    if (t < 0) return out;
    std::vector<int> a, b;
    auto rec_b = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(b.size()) == t) {
            out.push_back({a, b});
            return;
        }
        for (int v = lo; v <= n; ++v) {
            b.push_back(v);
            self(self, v);
            b.pop_back();
        }
    };
    auto rec_a = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(a.size()) == t + 1) {
            rec_b(rec_b, a[0]);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            a.push_back(v);
            self(self, v + 1);
            a.pop_back();
        }
    };
    rec_a(rec_a, 1);
    return out;
}

inline int omega(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.empty()) return 0;
    return static_cast<int>(std::count_if(b.begin(), b.end(), [&](int x) { return a[0] > x; }));
}

using TableauExpansion = std::map<TableauPair, Scalar>;

struct StraightenResult {
    TableauExpansion coefficients;
    int depth = 0;
};

namespace detail {

/// Sorts a (antisymmetric) and b (symmetric); sign 0 when a repeats.
inline int normalize_pair(std::vector<int>& a, std::vector<int>& b)
{
    int sign = permutation_sign(a);
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) return 0;
    std::sort(b.begin(), b.end());
    return sign;
}

inline int straighten_into(std::vector<int> a, std::vector<int> b, const Scalar& c, const Field& field,
                           TableauExpansion& out)
{
    if (omega(a, b) == 0) {
        auto& slot = out[TableauPair{std::move(a), std::move(b)}];
        slot = field.add(slot, c);
        return 0;
    }
    // Garnir on abar = (b_1, a_1, .., a_{t+1}), bbar = (b_2, .., b_t):
    // z_{a,b} = sum_{j>=2} (-1)^j z_{abar^(j), (abar_j, bbar)}
    const int t = static_cast<int>(b.size());
    int depth = 0;
    for (int j = 2; j <= t + 2; ++j) {
        std::vector<int> aj{b[0]};
        for (int k = 0; k <= t; ++k)
            if (k != j - 2) aj.push_back(a[k]);
        std::vector<int> bj{a[j - 2]};
        bj.insert(bj.end(), b.begin() + 1, b.end());
        int sign = normalize_pair(aj, bj);
        if (sign == 0) continue;
        Scalar cj = field.normalize(c * sign * (j % 2 ? -1 : 1));
        if (cj == 0) continue;
        depth = std::max(depth, 1 + straighten_into(std::move(aj), std::move(bj), cj, field, out));
    }
    return depth;
}

} // namespace detail

/// Writes z_{a,b} (a strictly and b weakly increasing) in the tableau basis.
inline StraightenResult straighten(const std::vector<int>& a, const std::vector<int>& b, int n, const Field& field)
{
    if (a.size() != b.size() + 1) throw std::invalid_argument("straighten needs |a| = |b| + 1");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < 1 || a[k] > n) throw std::invalid_argument("a index out of range");
        if (k > 0 && a[k] <= a[k - 1]) throw std::invalid_argument("a must be strictly increasing");
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] < 1 || b[k] > n) throw std::invalid_argument("b index out of range");
        if (k > 0 && b[k] < b[k - 1]) throw std::invalid_argument("b must be weakly increasing");
    }
    StraightenResult r;
    r.depth = detail::straighten_into(a, b, field.normalize(1), field, r.coefficients);
    std::erase_if(r.coefficients, [](const auto& kv) { return kv.second == 0; });
    return r;
}

inline KoszulElement expand(const TableauExpansion& e, int n, const Field& field)
{
    KoszulElement out(n, field);
    for (const auto& [p, c] : e) out += c * z_cycle(p, n, field);
    return out;
}

inline json to_json(const TableauExpansion& e)
{
    json out = json::object();
    for (const auto& [p, c] : e) out[format_pair(p)] = to_string(c);
    return out;
}

/**
 * The tableau cycles z_{a,b} with t = |b| are independent in K_t and their
 * classes form a basis of H_t in degree 2t+1.  Outside characteristic 0 the
 * outcome is recorded without being asserted.
 */
inline Report strand_span_check(KoszulComplex& kc, int t)
{
    Report report("strand");
    const int n = kc.n();
    const Field& field = kc.field();
    const bool theorem_regime = field.is_rational();
    auto put = [&](std::string name, json inputs, json expected, json got, bool pass) {
        if (theorem_regime)
            report.add(std::move(name), std::move(inputs), std::move(expected), std::move(got), pass);
        else
            report.add_experiment(std::move(name), std::move(inputs), {{"value", got}, {"predicted", expected}});
    };
    const json in = {{"n", n}, {"t", t}, {"char", field.characteristic()}};

    auto gens = tableau_generators(n, t);
    Integer predicted = t + 1 <= n ? schur_dim(hook_partition(t), n) : Integer(0);
    put("tableau_count", in, predicted.get_str(), std::to_string(gens.size()),
        Integer(static_cast<unsigned long>(gens.size())) == predicted);

    std::vector<KoszulElement> cycles;
    std::map<Exps, Subspace> chains;
    Index independent = 0;
    for (const auto& g : gens) {
        auto z = z_cycle(g, n, field);
        cycles.push_back(z);
        auto parts = z.by_multidegree();
        if (parts.size() != 1) continue;
        auto& [delta, part] = *parts.begin();
        auto& s = kc.slice(delta);
        auto it = chains.try_emplace(delta, s.basis(t).size(), field).first;
        independent += it->second.insert(s.to_vector(t, part));
    }
    put("independent_in_K", in, gens.size(), independent, independent == gens.size());

    Index dim = kc.homology_dim(t, 2 * t + 1);
    Index spanned = kc.class_span_dim(t, cycles);
    put("classes_span_strand", in, dim, spanned, spanned == dim);
    put("strand_dim_is_hook_schur_dim", in, predicted.get_str(), std::to_string(dim),
        Integer(static_cast<unsigned long>(dim)) == predicted);
    return report;
}

inline Report strand_span_check(int n, int t, const Field& field)
{
    KoszulComplex kc(n, field);
    return strand_span_check(kc, t);
}

} // namespace veronese
