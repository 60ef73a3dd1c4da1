// The gl(n) action on K(m^2) by derivations and the submodules of homology
// it generates.
#pragma once

#include "cycles.hpp"
#include "koszul.hpp"
#include "partitions.hpp"

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace veronese {

/// E_{ij}: the derivation sending x_j to x_i (1-based).
struct ElementaryOperator {
    int i;
    int j;
    friend auto operator<=>(const ElementaryOperator&, const ElementaryOperator&) = default;
};

inline std::vector<ElementaryOperator> all_operators(int n)
{
    std::vector<ElementaryOperator> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

/// Leibniz action on the polynomial factor and on every quad in the wedge.
inline KoszulElement act(const ElementaryOperator& E, const KoszulElement& u)
{
    const int n = u.n();
    if (E.i < 1 || E.i > n || E.j < 1 || E.j > n) throw std::invalid_argument("operator index out of range");
    const auto& qt = quad_table(n);
    KoszulElement out(n, u.field());
    for (const auto& [key, c] : u.terms()) {
        auto quads_of = [&](Wedge w) {
            std::vector<QuadMonomial> qs;
            for (int k : wedge_indices(w)) qs.push_back(qt.quad(k));
            return qs;
        };
        const auto quads = quads_of(key.wedge);
        auto exps = exps_vector(key.mono, n);

        if (exps[E.j - 1] > 0) {
            auto e = exps;
            Scalar mult = e[E.j - 1];
            e[E.j - 1]--;
            e[E.i - 1]++;
            out += KoszulElement::monomial(n, u.field(), c * mult, e, quads);
        }
        for (std::size_t slot = 0; slot < quads.size(); ++slot) {
            const auto [a, b] = quads[slot];
            // x_a x_b -> [a == j] x_i x_b + [b == j] x_a x_i
            for (int side = 0; side < 2; ++side) {
                int hit = side == 0 ? a : b, other = side == 0 ? b : a;
                if (hit != E.j) continue;
                auto qs = quads;
                qs[slot] = {std::min(E.i, other), std::max(E.i, other)};
                out += KoszulElement::monomial(n, u.field(), c, exps, qs);
            }
        }
    }
    return out;
}

struct GlClosure {
    Index dim = 0;
    // multidegree -> dimension of the closure in that weight space
    std::map<Exps, Index> weights;
};

/**
 * Smallest subspace of H_i in internal degree j containing the seed classes
 * and stable under every E_{ab}, found breadth-first.  Seeds are split into
 * weight components first, which stays inside the generated module because
 * the torus separates weights in characteristic 0.
 */
inline GlClosure gl_closure(KoszulComplex& kc, const std::vector<KoszulElement>& seeds, Bidegree bideg,
                            std::optional<std::vector<ElementaryOperator>> order = std::nullopt)
{
    if (!kc.field().is_rational()) throw std::invalid_argument("the gl closure needs characteristic 0");
    const int n = kc.n();
    const int i = bideg.i;
    auto ops = order ? *order : all_operators(n);

    std::map<Exps, Subspace> spans;
    std::deque<KoszulElement> queue;
    GlClosure out;

    auto absorb = [&](const KoszulElement& u) {
        for (const auto& [delta, part] : u.by_multidegree()) {
            auto& s = kc.slice(delta);
            auto it = spans.find(delta);
            if (it == spans.end()) it = spans.emplace(delta, s.boundaries(i)).first;
            auto v = s.to_vector(i, part);
            if (!it->second.insert(v)) continue;
            ++out.dim;
            ++out.weights[delta];
            queue.push_back(s.to_element(i, s.boundaries(i).reduce(v)));
        }
    };

    for (const auto& z : seeds) {
        if (z.is_zero()) continue;
        if (!kc.is_cycle(z)) throw std::invalid_argument("gl closure seed is not a cycle");
        auto b = z.bidegree();
        if (!b || *b != bideg) throw std::invalid_argument("gl closure seed has the wrong bidegree");
        absorb(z);
    }
    while (!queue.empty()) {
        auto v = std::move(queue.front());
        queue.pop_front();
        for (const auto& E : ops) absorb(act(E, v));
    }
    return out;
}

inline Index gl_module_dim(KoszulComplex& kc, const std::vector<KoszulElement>& seeds, Bidegree bideg)
{
    return gl_closure(kc, seeds, bideg).dim;
}

inline Index gl_module_dim(const std::vector<KoszulElement>& seeds, int n, Bidegree bideg, const Field& field)
{
    KoszulComplex kc(n, field);
    return gl_module_dim(kc, seeds, bideg);
}

/// The seed Z_{mu_1} ... Z_{mu_s} for a self-conjugate lambda with arms mu.
inline KoszulElement isotypic_seed(const Partition& lambda, int n, const Field& field)
{
    return squarefree_Z_product(frobenius(lambda).arms(), n, field);
}

inline json isotypic_summary(const Partition& lambda, int n, Bidegree seed, Index closure_dim,
                             const Integer& sdim, bool weights_match)
{
    return {{"lambda", to_json(lambda)},  {"n", n},
            {"seed_bidegree", {seed.i, seed.j}}, {"closure_dim", closure_dim},
            {"schur_dim", sdim.get_str()}, {"weights_match", weights_match}};
}

/**
 * The seed for lambda has a nonzero class whose gl-closure has the dimension
 * and weight multiset of the Schur module S^lambda in n variables.
 */
inline Report isotypic_verify(KoszulComplex& kc, const Partition& lambda)
{
    const int n = kc.n();
    if (lambda.length() > n) throw std::invalid_argument("partition has more rows than variables");
    Report report("isotypic");
    const auto mu = frobenius(lambda);
    const Bidegree seed_deg{mu.weight(), lambda.weight()};
    const std::string tag = format_partition(lambda);
    const json in = {{"lambda", to_json(lambda)}, {"n", n}, {"seed_bidegree", {seed_deg.i, seed_deg.j}}};

    auto seed = isotypic_seed(lambda, n, kc.field());
    bool nonzero = kc.class_is_nonzero(seed);
    report.add(tag + "/class_nonzero", in, true, nonzero, nonzero);

    auto closure = gl_closure(kc, {seed}, seed_deg);
    Integer sdim = schur_dim(lambda, n);
    report.add(tag + "/closure_dim", in, sdim.get_str(), std::to_string(closure.dim),
               Integer(static_cast<unsigned long>(closure.dim)) == sdim);

    std::map<Exponent, Integer> got;
    for (const auto& [delta, d] : closure.weights) got[exps_vector(delta, n)] = static_cast<unsigned long>(d);
    const auto expected = schur_poly(lambda, n).terms();
    bool weights_match = got == expected;
    json jw_got = json::object(), jw_exp = json::object();
    for (const auto& [e, c] : got) jw_got[json(e).dump()] = c.get_str();
    for (const auto& [e, c] : expected) jw_exp[json(e).dump()] = c.get_str();
    report.add(tag + "/weights", in, jw_exp, jw_got, weights_match);
    report.add(tag + "/summary", in, true, isotypic_summary(lambda, n, seed_deg, closure.dim, sdim, weights_match),
               nonzero && weights_match && Integer(static_cast<unsigned long>(closure.dim)) == sdim);
    return report;
}

inline Report isotypic_verify(const Partition& lambda, int n, const Field& field)
{
    KoszulComplex kc(n, field);
    return isotypic_verify(kc, lambda);
}

/**
 * The character of H_i in degree j expands in Schur polynomials with
 * coefficient 1 exactly on the self-conjugate lambda predicted for (i, j).
 * Over GF(p) the dimensions are only recorded.
 */
inline Report decomposition_verify(KoszulComplex& kc, int i, int j)
{
    Report report("decomposition");
    const int n = kc.n();
    const json in = {{"n", n}, {"i", i}, {"j", j}, {"char", kc.field().characteristic()}};
    const std::string tag = "H_" + std::to_string(i) + "_" + std::to_string(j);

    SchurExpansion predicted;
    Integer predicted_dim = 0;
    for (const auto& lambda : self_conjugate_enum(n, i, j)) {
        predicted[lambda] = 1;
        predicted_dim += schur_dim(lambda, n);
    }
    Index dim = kc.homology_dim(i, j);
    if (!kc.field().is_rational()) {
        report.add_experiment(tag, in, {{"dim", dim}, {"predicted_char0", predicted_dim.get_str()}});
        return report;
    }
    report.add(tag + "/dim", in, predicted_dim.get_str(), std::to_string(dim),
               Integer(static_cast<unsigned long>(dim)) == predicted_dim);
    try {
        auto expansion = schur_expand(kc.character(i, j));
        report.add(tag + "/schur_expansion", in, to_json(predicted), to_json(expansion), expansion == predicted);
    } catch (const NotSymmetric& e) {
        report.add(tag + "/schur_expansion", in, to_json(predicted), e.what(), false);
    }
    return report;
}

inline Report decomposition_verify(int n, int i, int j, const Field& field)
{
    KoszulComplex kc(n, field);
    return decomposition_verify(kc, i, j);
}

} // namespace veronese
