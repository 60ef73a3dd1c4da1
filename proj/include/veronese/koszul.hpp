/**
 * The Koszul complex of the square of the maximal ideal, K = S (x) /\* S_2,
 * on the quadratic monomials x_a x_b (a <= b) ordered lexicographically.
 *
 * A basis term is a monomial together with a strictly increasing wedge of
 * quadratic monomials; wedges are bitmasks over the quad index, so at most
 * eight variables are supported.  The differential preserves the N^n
 * multidegree, so all homology is computed on multidegree slices.
 */
#pragma once

#include "veronese/field.hpp"
#include "veronese/linalg.hpp"
#include "veronese/partitions.hpp"
#include "veronese/report.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace veronese {

inline constexpr int kMaxVars = 8;

using Exps = std::array<std::uint8_t, kMaxVars>;
using Wedge = std::uint64_t;

/// x_a x_b with 1 <= a <= b <= n.
struct QuadMonomial {
    int a = 1, b = 1;
    friend auto operator<=>(const QuadMonomial&, const QuadMonomial&) = default;
};

class QuadTable {
  public:
    explicit QuadTable(int n) : n_(n)
    {
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b) {
                Exps e{};
                ++e[a - 1];
                ++e[b - 1];
                quads_.push_back({a, b});
                exps_.push_back(e);
            }
    }

    int n() const { return n_; }
    int size() const { return static_cast<int>(quads_.size()); }
    const QuadMonomial& quad(int k) const { return quads_.at(k); }
    const Exps& exps(int k) const { return exps_[k]; }

    int index(int a, int b) const
    {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n_) throw std::out_of_range("quadratic monomial variable out of range");
        // rows a' < a contribute n - a' + 1 quads each
        int off = 0;
        for (int c = 1; c < a; ++c) off += n_ - c + 1;
        return off + (b - a);
    }

  private:
    int n_;
    std::vector<QuadMonomial> quads_;
    std::vector<Exps> exps_;
};

inline const QuadTable& quad_table(int n)
{
    static const std::array<QuadTable, kMaxVars + 1> tables = [] {
        return std::array<QuadTable, kMaxVars + 1>{QuadTable(0), QuadTable(1), QuadTable(2),
                                                    QuadTable(3), QuadTable(4), QuadTable(5),
                                                    QuadTable(6), QuadTable(7), QuadTable(8)};
    }();
    if (n < 1 || n > kMaxVars)
        throw std::invalid_argument("number of variables must be between 1 and " + std::to_string(kMaxVars));
    return tables[n];
}

inline int wedge_size(Wedge w) { return std::popcount(w); }

/// Number of elements of w strictly greater than k.
inline int count_above(Wedge w, int k)
{
    return k >= 63 ? 0 : std::popcount(w & ~((Wedge(2) << k) - 1));
}

/// Sign of sorting the concatenation w1 ^ w2, or 0 when they share a quad.
inline int merge_sign(Wedge w1, Wedge w2)
{
    if (w1 & w2) return 0;
    int inversions = 0;
    for (Wedge rest = w2; rest; rest &= rest - 1) inversions += count_above(w1, std::countr_zero(rest));
    return inversions % 2 ? -1 : 1;
}

inline std::vector<int> wedge_indices(Wedge w)
{
    std::vector<int> out;
    for (; w; w &= w - 1) out.push_back(std::countr_zero(w));
    return out;
}

inline Exps add_exps(const Exps& a, const Exps& b)
{
    Exps out;
    for (int k = 0; k < kMaxVars; ++k) out[k] = static_cast<std::uint8_t>(a[k] + b[k]);
    return out;
}

inline int degree(const Exps& e)
{
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

inline Exps make_exps(const std::vector<int>& v)
{
    if (v.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
    Exps e{};
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] < 0 || v[k] > 255) throw std::invalid_argument("exponent out of range");
        e[k] = static_cast<std::uint8_t>(v[k]);
    }
    return e;
}

inline std::vector<int> exps_vector(const Exps& e, int n) { return std::vector<int>(e.begin(), e.begin() + n); }

/// Basis term of K: monomial (x) wedge.
struct TermKey {
    Exps mono{};
    Wedge wedge = 0;
    friend bool operator==(const TermKey&, const TermKey&) = default;
};

/**
 * Canonical term order: monomials in decreasing lexicographic order of
 * exponents (x_1-heavy first), then wedges by size, then lexicographically
 * as increasing index lists.
 */
struct TermOrder {
    bool operator()(const TermKey& x, const TermKey& y) const
    {
        if (x.mono != y.mono) return x.mono > y.mono;
        if (x.wedge == y.wedge) return false;
        int sx = wedge_size(x.wedge), sy = wedge_size(y.wedge);
        if (sx != sy) return sx < sy;
        Wedge diff = x.wedge ^ y.wedge;
        return (x.wedge & diff & (~diff + 1)) != 0;
    }
};

inline Exps multidegree(const TermKey& key, int n)
{
    Exps e = key.mono;
    const auto& qt = quad_table(n);
    for (int k : wedge_indices(key.wedge)) e = add_exps(e, qt.exps(k));
    return e;
}

struct Bidegree {
    int i = 0;  // homological
    int j = 0;  // internal
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline Bidegree bidegree(const TermKey& key)
{
    int i = wedge_size(key.wedge);
    return {i, degree(key.mono) + 2 * i};
}

/// Exact combination of basis terms in canonical form.
class KoszulElement {
  public:
    using Terms = std::map<TermKey, Scalar, TermOrder>;

    KoszulElement() : KoszulElement(1, Field::rationals()) {}
    KoszulElement(int n, Field field) : n_(n), field_(field) { quad_table(n); }

    static KoszulElement one(int n, Field field)
    {
        KoszulElement u(n, field);
        u.add_term(TermKey{}, 1);
        return u;
    }

    /// c * x^exps (x) q_1 ^ ... ^ q_k with the quads in any order.
    static KoszulElement monomial(int n, Field field, const Scalar& c, const std::vector<int>& exps,
                                  const std::vector<QuadMonomial>& quads)
    {
        if (static_cast<int>(exps.size()) != n) throw std::invalid_argument("exponent vector length differs from n");
        KoszulElement u(n, field);
        const auto& qt = quad_table(n);
        Wedge w = 0;
        int sign = 1;
        for (const auto& q : quads) {
            Wedge bit = Wedge(1) << qt.index(q.a, q.b);
            sign *= merge_sign(w, bit);
            if (sign == 0) return u;
            w |= bit;
        }
        u.add_term(TermKey{make_exps(exps), w}, c * sign);
        return u;
    }

    int n() const { return n_; }
    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const TermKey& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(const TermKey& key, const Scalar& c)
    {
        Scalar v = field_.normalize(c);
        if (v == 0) return;
        auto [it, inserted] = terms_.emplace(key, v);
        if (!inserted) {
            it->second = field_.add(it->second, v);
            if (it->second == 0) terms_.erase(it);
        }
    }

    KoszulElement& operator+=(const KoszulElement& o)
    {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    KoszulElement& operator-=(const KoszulElement& o)
    {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend KoszulElement operator+(KoszulElement a, const KoszulElement& b) { return a += b; }
    friend KoszulElement operator-(KoszulElement a, const KoszulElement& b) { return a -= b; }

    friend KoszulElement operator*(const Scalar& c, const KoszulElement& u)
    {
        KoszulElement out(u.n_, u.field_);
        for (const auto& [k, x] : u.terms_) out.add_term(k, c * x);
        return out;
    }

    KoszulElement operator-() const { return Scalar(-1) * *this; }

    friend bool operator==(const KoszulElement& a, const KoszulElement& b)
    {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// Bidegree shared by all terms, if any; nullopt for zero or mixed.
    std::optional<Bidegree> bidegree() const
    {
        std::optional<Bidegree> out;
        for (const auto& [k, c] : terms_) {
            Bidegree b = veronese::bidegree(k);
            if (out && *out != b) return std::nullopt;
            out = b;
        }
        return out;
    }

    std::optional<int> homological_degree() const
    {
        std::optional<int> out;
        for (const auto& [k, c] : terms_) {
            int i = wedge_size(k.wedge);
            if (out && *out != i) return std::nullopt;
            out = i;
        }
        return out;
    }

    /// Components by multidegree.
    std::map<Exps, KoszulElement> by_multidegree() const
    {
        std::map<Exps, KoszulElement> out;
        for (const auto& [k, c] : terms_) {
            auto [it, inserted] = out.try_emplace(veronese::multidegree(k, n_), n_, field_);
            it->second.terms_.emplace(k, c);
        }
        return out;
    }

    std::set<Exps> multidegrees() const
    {
        std::set<Exps> out;
        for (const auto& [k, c] : terms_) out.insert(veronese::multidegree(k, n_));
        return out;
    }

    void check_compatible(const KoszulElement& o) const
    {
        if (o.n_ != n_) throw std::invalid_argument("Koszul elements over different numbers of variables");
        if (!(o.field_ == field_)) throw std::invalid_argument("Koszul elements over different fields");
    }

  private:
    int n_;
    Field field_;
    Terms terms_;
};

namespace detail {

/// d of a single basis term as signed terms.
inline std::vector<std::pair<TermKey, int>> differential_terms(const TermKey& key, int n)
{
    std::vector<std::pair<TermKey, int>> out;
    const auto& qt = quad_table(n);
    int pos = 0;
    for (int k : wedge_indices(key.wedge)) {
        TermKey t{add_exps(key.mono, qt.exps(k)), key.wedge & ~(Wedge(1) << k)};
        out.emplace_back(t, pos % 2 ? -1 : 1);
        ++pos;
    }
    return out;
}

} // namespace detail

/// d(f (x) q_1 ^ ... ^ q_i) = sum_k (-1)^(k-1) f q_k (x) q_1 ^ .. ^ q_k^ .. ^ q_i.
inline KoszulElement differential(const KoszulElement& u)
{
    KoszulElement out(u.n(), u.field());
    for (const auto& [key, c] : u.terms())
        for (const auto& [t, sign] : detail::differential_terms(key, u.n())) out.add_term(t, c * sign);
    return out;
}

/// (f (x) w)(g (x) v) = fg (x) w ^ v.
inline KoszulElement wedge_multiply(const KoszulElement& u, const KoszulElement& v)
{
    u.check_compatible(v);
    KoszulElement out(u.n(), u.field());
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
            int sign = merge_sign(ku.wedge, kv.wedge);
            if (sign == 0) continue;
            out.add_term(TermKey{add_exps(ku.mono, kv.mono), ku.wedge | kv.wedge}, cu * cv * sign);
        }
    return out;
}

inline KoszulElement operator*(const KoszulElement& u, const KoszulElement& v) { return wedge_multiply(u, v); }

/// Basis of K_i in multidegree delta, in canonical term order.
inline std::vector<TermKey> component_basis(int n, int i, const Exps& delta)
{
    std::vector<TermKey> out;
    const auto& qt = quad_table(n);
    if (i < 0 || i > qt.size()) return out;
    for (int k = n; k < kMaxVars; ++k)
        if (delta[k] != 0) return out;
    if (degree(delta) < 2 * i) return out;
    Exps used{};
    auto rec = [&](auto&& self, int next, int remaining, Wedge w) -> void {
        if (remaining == 0) {
            TermKey key;
            key.wedge = w;
            for (int c = 0; c < kMaxVars; ++c) key.mono[c] = static_cast<std::uint8_t>(delta[c] - used[c]);
            out.push_back(key);
            return;
        }
        for (int k = next; k <= qt.size() - remaining; ++k) {
            const auto& q = qt.quad(k);
            used[q.a - 1]++;
            used[q.b - 1]++;
            if (used[q.a - 1] <= delta[q.a - 1] && used[q.b - 1] <= delta[q.b - 1])
                self(self, k + 1, remaining - 1, w | (Wedge(1) << k));
            used[q.a - 1]--;
            used[q.b - 1]--;
        }
    };
    rec(rec, 0, i, 0);
    std::sort(out.begin(), out.end(), TermOrder{});
    return out;
}

/// All multidegrees in N^n of total degree j.
inline std::vector<Exps> compositions(int n, int j)
{
    std::vector<Exps> out;
    Exps e{};
    auto rec = [&](auto&& self, int k, int remaining) -> void {
        if (k == n - 1) {
            e[k] = static_cast<std::uint8_t>(remaining);
            out.push_back(e);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            e[k] = static_cast<std::uint8_t>(v);
            self(self, k + 1, remaining - v);
        }
        e[k] = 0;
    };
    if (j >= 0) rec(rec, 0, j);
    return out;
}

/// Basis of K_i in internal degree j (all multidegrees), canonical order.
inline std::vector<TermKey> component_basis(int n, int i, int j)
{
    std::vector<TermKey> out;
    for (const auto& delta : compositions(n, j)) {
        auto part = component_basis(n, i, delta);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(), TermOrder{});
    return out;
}

/**
 * The subcomplex of K in one multidegree: bases, boundary matrices,
 * boundary subspaces and homology, each computed on first use.
 */
class SliceComplex {
  public:
    SliceComplex(int n, const Exps& delta, Field field) : n_(n), delta_(delta), field_(field)
    {
        const int top = quad_table(n).size();
        levels_.resize(top + 2);
    }

    int n() const { return n_; }
    const Exps& delta() const { return delta_; }
    const Field& field() const { return field_; }
    int top_degree() const { return static_cast<int>(levels_.size()) - 2; }

    const std::vector<TermKey>& basis(int i) { return level(i).basis; }

    Index dim(int i) { return in_range(i) ? basis(i).size() : 0; }

    std::optional<Index> index_of(int i, const TermKey& key)
    {
        auto& lv = level(i);
        auto it = lv.index.find(key);
        if (it == lv.index.end()) return std::nullopt;
        return it->second;
    }

    /// Matrix of d: K_i -> K_{i-1} in this slice.
    const SparseMatrix& boundary_matrix(int i)
    {
        auto& lv = level(i);
        if (!lv.d) {
            const auto& src = basis(i);
            SparseMatrix m(dim(i - 1), src.size());
            if (i >= 1) {
                for (Index c = 0; c < src.size(); ++c) {
                    std::vector<SparseVector::Entry> col;
                    for (const auto& [t, sign] : detail::differential_terms(src[c], n_))
                        col.emplace_back(*index_of(i - 1, t), Scalar(sign));
                    m.set_column(c, SparseVector(std::move(col)));
                }
            }
            lv.d = std::make_unique<SparseMatrix>(std::move(m));
        }
        return *lv.d;
    }

    Index rank_d(int i)
    {
        if (!in_range(i) || !in_range(i - 1)) return 0;
        auto& lv = level(i);
        if (!lv.rank) lv.rank = rank(boundary_matrix(i), field_);
        return *lv.rank;
    }

    /// Image of d_{i+1} inside K_i.
    const Subspace& boundaries(int i)
    {
        auto& lv = level(i);
        if (!lv.boundaries) {
            Subspace s(dim(i), field_);
            if (in_range(i + 1))
                for (const auto& c : boundary_matrix(i + 1).columns()) s.insert(c);
            lv.boundaries = std::make_unique<Subspace>(std::move(s));
        }
        return *lv.boundaries;
    }

    Index homology_dim(int i)
    {
        if (!in_range(i)) return 0;
        return dim(i) - rank_d(i) - rank_d(i + 1);
    }

    /// Cycles whose classes form a basis of H_i, reduced modulo boundaries.
    std::vector<SparseVector> homology_reps(int i)
    {
        std::vector<SparseVector> out;
        if (!in_range(i) || homology_dim(i) == 0) return out;
        const Subspace& b = boundaries(i);
        Subspace span = b;
        SparseMatrix d = in_range(i - 1) ? boundary_matrix(i) : SparseMatrix(0, dim(i));
        for (const auto& z : kernel_basis(d, field_)) {
            if (!span.insert(z)) continue;
            out.push_back(b.reduce(z));
        }
        return out;
    }

    SparseVector to_vector(int i, const KoszulElement& u)
    {
        std::vector<SparseVector::Entry> entries;
        for (const auto& [k, c] : u.terms()) {
            auto idx = index_of(i, k);
            if (!idx) throw std::invalid_argument("term outside the slice basis");
            entries.emplace_back(*idx, c);
        }
        return SparseVector(std::move(entries));
    }

    KoszulElement to_element(int i, const SparseVector& v)
    {
        KoszulElement u(n_, field_);
        const auto& b = basis(i);
        for (const auto& [idx, c] : v.entries()) u.add_term(b.at(idx), c);
        return u;
    }

  private:
    struct Level {
        bool built = false;
        std::vector<TermKey> basis;
        std::map<TermKey, Index, TermOrder> index;
        std::unique_ptr<SparseMatrix> d;
        std::optional<Index> rank;
        std::unique_ptr<Subspace> boundaries;
    };

    bool in_range(int i) const { return i >= 0 && i <= top_degree(); }

    Level& level(int i)
    {
        if (!in_range(i)) return outside_;
        Level& lv = levels_[i];
        if (!lv.built) {
            lv.basis = component_basis(n_, i, delta_);
            for (Index k = 0; k < lv.basis.size(); ++k) lv.index.emplace(lv.basis[k], k);
            lv.built = true;
        }
        return lv;
    }

    int n_;
    Exps delta_;
    Field field_;
    std::vector<Level> levels_;
    Level outside_{true, {}, {}, nullptr, std::nullopt, nullptr};
};

/**
 * K(m^2) over a fixed field and number of variables with a cache of slices.
 * Not thread-safe; give each worker its own instance.
 */
class KoszulComplex {
  public:
    KoszulComplex(int n, Field field) : n_(n), field_(field) { quad_table(n); }

    int n() const { return n_; }
    const Field& field() const { return field_; }
    int top_degree() const { return quad_table(n_).size(); }

    SliceComplex& slice(const Exps& delta)
    {
        auto it = slices_.find(delta);
        if (it == slices_.end())
            it = slices_.emplace(delta, std::make_unique<SliceComplex>(n_, delta, field_)).first;
        return *it->second;
    }

    Index homology_dim(int i, const Exps& delta) { return slice(delta).homology_dim(i); }

    Index homology_dim(int i, int j)
    {
        Index total = 0;
        for (const auto& delta : compositions(n_, j)) total += homology_dim(i, delta);
        return total;
    }

    /// The multigraded character sum_delta dim H_i(delta) x^delta in degree j.
    Polynomial character(int i, int j)
    {
        Polynomial p(n_);
        for (const auto& delta : compositions(n_, j)) {
            Index d = homology_dim(i, delta);
            if (d) p.add_term(exps_vector(delta, n_), Integer(static_cast<unsigned long>(d)));
        }
        return p;
    }

    bool is_cycle(const KoszulElement& u) const { return differential(u).is_zero(); }

    bool is_boundary(const KoszulElement& u)
    {
        check(u);
        if (u.is_zero()) return true;
        auto i = require_homological_degree(u);
        for (const auto& [delta, part] : u.by_multidegree()) {
            auto& s = slice(delta);
            if (!s.boundaries(i).contains(s.to_vector(i, part))) return false;
        }
        return true;
    }

    bool class_is_nonzero(const KoszulElement& u) { return is_cycle(u) && !is_boundary(u); }

    /// Canonical representative of u modulo boundaries.
    KoszulElement reduce_class(const KoszulElement& u)
    {
        check(u);
        KoszulElement out(n_, field_);
        if (u.is_zero()) return out;
        auto i = require_homological_degree(u);
        for (const auto& [delta, part] : u.by_multidegree()) {
            auto& s = slice(delta);
            out += s.to_element(i, s.boundaries(i).reduce(s.to_vector(i, part)));
        }
        return out;
    }

    std::vector<KoszulElement> homology_rep_basis(int i, const Exps& delta)
    {
        auto& s = slice(delta);
        std::vector<KoszulElement> out;
        for (const auto& v : s.homology_reps(i)) out.push_back(s.to_element(i, v));
        return out;
    }

    std::vector<KoszulElement> homology_rep_basis(int i, int j)
    {
        std::vector<KoszulElement> out;
        for (const auto& delta : compositions(n_, j)) {
            auto part = homology_rep_basis(i, delta);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }

    /**
     * Dimension of the span of the classes of the given cycles in H_i.
     * Each element is split into multidegree components first, which is only
     * the span of the originals when the inputs are multihomogeneous.
     */
    Index class_span_dim(int i, const std::vector<KoszulElement>& cycles, bool require_multihomogeneous = true)
    {
        std::map<Exps, Subspace> spans;
        for (const auto& u : cycles) {
            check(u);
            if (u.is_zero()) continue;
            if (require_homological_degree(u) != i) throw std::invalid_argument("element outside homological degree");
            auto parts = u.by_multidegree();
            if (require_multihomogeneous && parts.size() > 1)
                throw std::invalid_argument("class_span_dim needs multihomogeneous elements");
            for (const auto& [delta, part] : parts) {
                auto& s = slice(delta);
                auto it = spans.find(delta);
                if (it == spans.end()) it = spans.emplace(delta, s.boundaries(i)).first;
                it->second.insert(s.to_vector(i, part));
            }
        }
        Index total = 0;
        for (auto& [delta, sp] : spans) total += sp.dim() - slice(delta).boundaries(i).dim();
        return total;
    }

  private:
    void check(const KoszulElement& u) const
    {
        if (u.n() != n_ || !(u.field() == field_))
            throw std::invalid_argument("element does not belong to this complex");
    }

    static int require_homological_degree(const KoszulElement& u)
    {
        auto i = u.homological_degree();
        if (!i) throw std::invalid_argument("element is not homogeneous in homological degree");
        return *i;
    }

    int n_;
    Field field_;
    std::map<Exps, std::unique_ptr<SliceComplex>> slices_;
};

inline Index homology_dim(int n, int i, int j, const Field& field) { return KoszulComplex(n, field).homology_dim(i, j); }

inline Index homology_dim(int n, int i, const Exps& delta, const Field& field)
{
    return KoszulComplex(n, field).homology_dim(i, delta);
}

/**
 * Even internal degrees of H are spanned by products of an even number of
 * lowest-strand classes (those in H_t in degree 2t+1).  A class in H_i in
 * degree j needs exactly j - 2i such factors.
 */
inline Report lowest_strand_span_check(KoszulComplex& kc, int i_max)
{
    Report report("lowest-strand");
    const int n = kc.n();
    const bool theorem_regime = kc.field().is_rational();

    std::vector<std::pair<int, KoszulElement>> gens;
    for (int t = 0; t <= i_max; ++t)
        for (auto& z : kc.homology_rep_basis(t, 2 * t + 1)) gens.emplace_back(t, std::move(z));

    for (int i = 0; i <= i_max; ++i)
        for (int j = 2 * i; j <= 2 * i + n; j += 2) {
            const int factors = j - 2 * i;
            Index dim = kc.homology_dim(i, j);
            std::vector<KoszulElement> products;
            std::vector<std::size_t> pick;
            auto rec = [&](auto&& self, std::size_t from, int remaining_deg) -> void {
                if (static_cast<int>(pick.size()) == factors) {
                    if (remaining_deg != 0) return;
                    KoszulElement p = KoszulElement::one(n, kc.field());
                    for (auto g : pick) p = p * gens[g].second;
                    if (!p.is_zero()) products.push_back(std::move(p));
                    return;
                }
                for (std::size_t g = from; g < gens.size(); ++g) {
                    if (gens[g].first > remaining_deg) continue;
                    pick.push_back(g);
                    self(self, g, remaining_deg - gens[g].first);
                    pick.pop_back();
                }
            };
            if (dim > 0) rec(rec, 0, i);
            Index spanned = dim > 0 ? kc.class_span_dim(i, products) : 0;
            json inputs = {{"n", n}, {"i", i}, {"j", j}, {"factors", factors}, {"products", products.size()}};
            json got = {{"spanned", spanned}, {"dim", dim}};
            if (theorem_regime)
                report.add("H_" + std::to_string(i) + "_" + std::to_string(j), inputs, dim, got, spanned == dim);
            else
                report.add_experiment("H_" + std::to_string(i) + "_" + std::to_string(j), inputs, got);
        }
    return report;
}

inline Report lowest_strand_span_check(int n, int i_max, const Field& field)
{
    KoszulComplex kc(n, field);
    return lowest_strand_span_check(kc, i_max);
}

// ---------------------------------------------------------------------------
// text and JSON forms

/// `x^(1,0)⊗[22]`, prefixed by `c*` unless c = 1.
inline std::string format_term(const TermKey& key, const Scalar& c, int n)
{
    std::ostringstream os;
    if (c != 1) os << c.get_str() << "*";
    os << "x^(";
    for (int k = 0; k < n; ++k) os << (k ? "," : "") << int(key.mono[k]);
    os << ")⊗[";
    const auto& qt = quad_table(n);
    bool first = true;
    for (int k : wedge_indices(key.wedge)) {
        os << (first ? "" : "^") << qt.quad(k).a << qt.quad(k).b;
        first = false;
    }
    os << "]";
    return os.str();
}

/// Terms in canonical order; negative rational coefficients print as " - ".
inline std::string format_element(const KoszulElement& u)
{
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : u.terms()) {
        bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += format_term(k, neg ? Scalar(-c) : c, u.n());
    }
    return out;
}

inline json to_json(const KoszulElement& u)
{
    json arr = json::array();
    const auto& qt = quad_table(u.n());
    for (const auto& [k, c] : u.terms()) {
        json wedge = json::array();
        for (int q : wedge_indices(k.wedge)) wedge.push_back({qt.quad(q).a, qt.quad(q).b});
        arr.push_back({{"coeff", c.get_str()}, {"exps", exps_vector(k.mono, u.n())}, {"wedge", wedge}});
    }
    return arr;
}

inline KoszulElement element_from_json(const json& arr, int n, const Field& field)
{
    KoszulElement u(n, field);
    for (const auto& t : arr) {
        std::vector<QuadMonomial> quads;
        for (const auto& q : t.at("wedge")) quads.push_back({q.at(0).get<int>(), q.at(1).get<int>()});
        u += KoszulElement::monomial(n, field, parse_scalar(t.at("coeff").get<std::string>()),
                                     t.at("exps").get<std::vector<int>>(), quads);
    }
    return u;
}

} // namespace veronese
