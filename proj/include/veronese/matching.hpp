// The matching complex of K_n, its reduced homology, and the comparison with
// the squarefree slice of K(m^2).
#pragma once

#include "cycles.hpp"
#include "koszul.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace veronese {

using Edge = std::pair<int, int>;

/// All pairs {a < b} of 1..n in lex order; vertex k of the matching complex.
inline std::vector<Edge> complete_graph_edges(int n)
{
    std::vector<Edge> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
    return out;
}

/// A face: sorted vertex indices into complete_graph_edges(n).
using Face = std::vector<int>;

/**
 * Simplicial chain complex with the empty face in dimension -1.
 * faces(d) for d >= -1; boundary(d) maps C_d to C_{d-1} for d >= 0.
 */
class ChainComplex {
  public:
    ChainComplex() = default;
    explicit ChainComplex(std::vector<std::vector<Face>> by_dim) : faces_(std::move(by_dim))
    {
        if (faces_.empty()) faces_.push_back({Face{}});
        for (auto& level : faces_) std::sort(level.begin(), level.end());
        index_.resize(faces_.size());
        for (std::size_t d = 0; d < faces_.size(); ++d)
            for (std::size_t k = 0; k < faces_[d].size(); ++k) index_[d][faces_[d][k]] = k;
    }

    int top_dim() const { return static_cast<int>(faces_.size()) - 2; }

    const std::vector<Face>& faces(int d) const
    {
        static const std::vector<Face> none;
        return d >= -1 && d <= top_dim() ? faces_[d + 1] : none;
    }

    Index count(int d) const { return faces(d).size(); }

    SparseMatrix boundary(int d) const
    {
        SparseMatrix m(count(d - 1), count(d));
        if (d < 0) return m;
        const auto& below = index_[d];
        for (Index c = 0; c < count(d); ++c) {
            const Face& f = faces(d)[c];
            std::vector<SparseVector::Entry> col;
            for (std::size_t m_ = 0; m_ < f.size(); ++m_) {
                Face g = f;
                g.erase(g.begin() + m_);
                col.emplace_back(below.at(g), Scalar(m_ % 2 ? -1 : 1));
            }
            m.set_column(c, SparseVector(std::move(col)));
        }
        return m;
    }

  private:
    std::vector<std::vector<Face>> faces_;
    std::vector<std::map<Face, Index>> index_;
};

/// Delta_n: vertices are the pairs of 1..n, faces the partial matchings.
inline ChainComplex matching_complex(int n)
{
    if (n < 1) throw std::invalid_argument("matching complex needs n >= 1");
    const auto edges = complete_graph_edges(n);
    std::vector<std::vector<Face>> by_dim{{Face{}}};
    Face f;
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self, int from) -> void {
        for (int k = from; k < static_cast<int>(edges.size()); ++k) {
            auto [a, b] = edges[k];
            if (used[a] || used[b]) continue;
            used[a] = used[b] = true;
            f.push_back(k);
            if (by_dim.size() < f.size() + 1) by_dim.emplace_back();
            by_dim[f.size()].push_back(f);
            self(self, k + 1);
            f.pop_back();
            used[a] = used[b] = false;
        }
    };
    rec(rec, 0);
    return ChainComplex(std::move(by_dim));
}

struct HomologyGroup {
    Index rank = 0;
    // invariant factors > 1, only filled when torsion was requested
    std::vector<Integer> torsion;
};

inline HomologyGroup reduced_homology(const ChainComplex& cx, int d, const Field& field, bool torsion = false)
{
    HomologyGroup h;
    if (d < -1 || d > cx.top_dim()) return h;
    Index r_out = d >= 0 ? rank(cx.boundary(d), field) : 0;
    Index r_in = rank(cx.boundary(d + 1), field);
    h.rank = cx.count(d) - r_out - r_in;
    if (torsion)
        for (const auto& f : smith_invariant_factors(cx.boundary(d + 1)))
            if (f > 1) h.torsion.push_back(f);
    return h;
}

inline Index reduced_homology(int n, int d, const Field& field)
{
    return reduced_homology(matching_complex(n), d, field).rank;
}

namespace detail {

inline std::vector<std::vector<int>> one_skeleton(const ChainComplex& cx)
{
    std::vector<std::vector<int>> adj(cx.count(0));
    for (const auto& e : cx.faces(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    return adj;
}

inline std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src)
{
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

/// Shortest cycle length, 0 for a forest.
inline int girth(const std::vector<std::vector<int>>& adj)
{
    int best = 0;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        std::vector<int> dist(adj.size(), -1), parent(adj.size(), -1);
        std::deque<int> q{static_cast<int>(s)};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if (parent[v] != w) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

} // namespace detail

/// The 1-skeleton of Delta_5 is the Petersen graph.
inline Report petersen_check()
{
    Report report("petersen");
    auto cx = matching_complex(5);
    auto adj = detail::one_skeleton(cx);
    const json in = {{"n", 5}};

    report.add("vertices", in, 10, cx.count(0), cx.count(0) == 10);
    report.add("edges", in, 15, cx.count(1), cx.count(1) == 15);
    report.add("no_2_faces", in, 0, cx.count(2), cx.count(2) == 0);
    bool regular = std::all_of(adj.begin(), adj.end(), [](const auto& nb) { return nb.size() == 3; });
    report.add("3_regular", in, true, regular, regular);
    int g = detail::girth(adj);
    report.add("girth", in, 5, g, g == 5);
    int diameter = 0;
    bool connected = true;
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (int d : detail::bfs_distances(adj, static_cast<int>(v))) {
            if (d < 0) connected = false;
            diameter = std::max(diameter, d);
        }
    report.add("connected", in, true, connected, connected);
    report.add("diameter", in, 2, diameter, diameter == 2);
    return report;
}

inline Exps all_ones(int n)
{
    Exps e{};
    for (int k = 0; k < n; ++k) e[k] = 1;
    return e;
}

/// dim H_i(m^2) in multidegree (1,..,1) against dim H~_{i-1}(Delta_n).
inline Report squarefree_slice_compare(int n, const Field& field)
{
    Report report("squarefree-slice");
    auto cx = matching_complex(n);
    KoszulComplex kc(n, field);
    for (int i = 0; i <= n / 2 + 1; ++i) {
        Index koszul = kc.homology_dim(i, all_ones(n));
        Index simplicial = reduced_homology(cx, i - 1, field).rank;
        report.add("i=" + std::to_string(i), {{"n", n}, {"i", i}, {"char", field.characteristic()}}, simplicial,
                   koszul, koszul == simplicial);
    }
    return report;
}

/// The five-term element of Sym^1 (x) wedge^2 Sym^2 with n = 5.
inline KoszulElement char2_element(const Field& field)
{
    auto t = [&](int v, QuadMonomial p, QuadMonomial q) {
        std::vector<int> e(5, 0);
        e[v - 1] = 1;
        return KoszulElement::monomial(5, field, 1, e, {p, q});
    };
    return t(1, {2, 3}, {4, 5}) + t(3, {4, 5}, {1, 2}) + t(5, {1, 2}, {3, 4}) + t(2, {3, 4}, {1, 5}) +
           t(4, {1, 5}, {2, 3});
}

/// The z_{a,b} with t = 2 in multidegree (1,1,1,1,1): a a 3-subset, b its complement.
inline std::vector<KoszulElement> char2_generators(const Field& field)
{
    std::vector<KoszulElement> out;
    for (int mask = 0; mask < 32; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
        std::vector<int> a, b;
        for (int k = 1; k <= 5; ++k) (mask >> (k - 1) & 1 ? a : b).push_back(k);
        out.push_back(z_cycle(a, b, 5, field));
    }
    return out;
}

/**
 * Over GF(2) the five-term z is a nonzero class outside the span of the
 * squarefree z_{a,b}: the coefficient-sum functional is 0 on each six-term
 * generator and 1 on z.  Over QQ it lies in that span.
 */
inline Report char2_witness()
{
    Report report("char2");
    const Field f2 = Field::prime(2), qq = Field::rationals();
    const Exps delta = all_ones(5);

    auto z2 = char2_element(f2);
    report.add("cycle_gf2", {{"char", 2}}, true, differential(z2).is_zero(), differential(z2).is_zero());
    KoszulComplex k2(5, f2);
    bool nonzero = k2.class_is_nonzero(z2);
    report.add("class_nonzero_gf2", {{"char", 2}}, true, nonzero, nonzero);
    auto& s2 = k2.slice(delta);
    report.add("no_boundaries_in_slice", {{"char", 2}}, 0, s2.dim(3), s2.dim(3) == 0);

    auto coefficient_sum = [&](const KoszulElement& u) {
        Scalar s = 0;
        for (const auto& [k, c] : u.terms()) s += c;
        return f2.normalize(s);
    };
    auto gens2 = char2_generators(f2);
    json sums = json::array(), sizes = json::array();
    bool all_zero = true, all_six = true;
    for (const auto& g : gens2) {
        Scalar s = coefficient_sum(g);
        sums.push_back(to_string(s));
        sizes.push_back(g.size());
        all_zero = all_zero && s == 0;
        all_six = all_six && g.size() == 6;
    }
    report.add("generator_count", {{"t", 2}}, 10, gens2.size(), gens2.size() == 10);
    report.add("generators_have_six_terms", {{"t", 2}}, 6, sizes, all_six);
    report.add("functional_on_generators", {{"char", 2}}, 0, sums, all_zero);
    Scalar fz = coefficient_sum(z2);
    report.add("functional_on_z", {{"char", 2}}, "1", to_string(fz), fz == 1);

    SparseMatrix g2(s2.dim(2), 0);
    for (const auto& g : gens2) g2.append_column(s2.to_vector(2, g));
    auto r2 = in_span(s2.to_vector(2, z2), g2, f2);
    report.add("outside_span_gf2", {{"char", 2}}, false, r2.member, !r2.member);

    auto zq = char2_element(qq);
    report.add("cycle_qq", {{"char", 0}}, true, differential(zq).is_zero(), differential(zq).is_zero());
    KoszulComplex kq(5, qq);
    auto& sq = kq.slice(delta);
    SparseMatrix gq(sq.dim(2), 0);
    for (const auto& g : char2_generators(qq)) gq.append_column(sq.to_vector(2, g));
    auto rq = in_span(sq.to_vector(2, zq), gq, qq);
    report.add("inside_span_qq", {{"char", 0}, {"span_rank", rank(gq, qq)}}, true, rq.member, rq.member);
    return report;
}

inline json faces_json(const ChainComplex& cx, int n)
{
    const auto edges = complete_graph_edges(n);
    json out = json::object();
    for (int d = -1; d <= cx.top_dim(); ++d) {
        json level = json::array();
        for (const auto& f : cx.faces(d)) {
            json face = json::array();
            for (int v : f) face.push_back({edges[v].first, edges[v].second});
            level.push_back(std::move(face));
        }
        out[std::to_string(d)] = std::move(level);
    }
    return out;
}

} // namespace veronese
