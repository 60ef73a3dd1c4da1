/**
 * Exact sparse linear algebra over QQ and GF(p).
 *
 * Vectors and matrices are stored sparsely with GMP rational entries; all
 * elimination happens on private copies in a field-native representation.
 * Rank over QQ goes through integer matrices with fraction-free elimination,
 * everything else (kernels, span membership, quotient reduction) through an
 * incrementally maintained reduced row echelon form.
 */
#pragma once

#include "veronese/field.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace veronese {

using Index = std::size_t;

/// Sorted list of (index, nonzero scalar) pairs.
class SparseVector {
  public:
    using Entry = std::pair<Index, Scalar>;

    SparseVector() = default;
    explicit SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) { canonicalize(); }

    static SparseVector unit(Index i, Scalar value = 1)
    {
        SparseVector v;
        if (value != 0) v.entries_.emplace_back(i, std::move(value));
        return v;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }

    Scalar get(Index i) const
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                                   [](const Entry& e, Index k) { return e.first < k; });
        return (it != entries_.end() && it->first == i) ? it->second : Scalar(0);
    }

    /// Sort, merge duplicates, drop zeros.
    void canonicalize()
    {
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::vector<Entry> out;
        out.reserve(entries_.size());
        for (auto& e : entries_) {
            if (!out.empty() && out.back().first == e.first)
                out.back().second += e.second;
            else
                out.push_back(std::move(e));
        }
        std::erase_if(out, [](const Entry& e) { return e.second == 0; });
        entries_ = std::move(out);
    }

    void normalize(const Field& field)
    {
        for (auto& e : entries_) e.second = field.normalize(e.second);
        std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b)
    {
        return a.entries_ == b.entries_;
    }

  private:
    std::vector<Entry> entries_;
};

inline Scalar dot(const SparseVector& a, const SparseVector& b)
{
    Scalar s = 0;
    auto i = a.entries().begin(), j = b.entries().begin();
    while (i != a.entries().end() && j != b.entries().end()) {
        if (i->first < j->first) ++i;
        else if (j->first < i->first) ++j;
        else { s += i->second * j->second; ++i; ++j; }
    }
    return s;
}

/// Column-major sparse matrix.
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(Index rows, Index cols) : rows_(rows), columns_(cols) {}

    Index rows() const { return rows_; }
    Index cols() const { return columns_.size(); }

    const SparseVector& column(Index c) const { return columns_.at(c); }
    const std::vector<SparseVector>& columns() const { return columns_; }

    void set_column(Index c, SparseVector v)
    {
        check_column(v);
        columns_.at(c) = std::move(v);
    }

    Index append_column(SparseVector v)
    {
        check_column(v);
        columns_.push_back(std::move(v));
        return columns_.size() - 1;
    }

    void set(Index r, Index c, const Scalar& value)
    {
        if (r >= rows_ || c >= cols()) throw std::out_of_range("matrix index out of range");
        auto entries = columns_[c].entries();
        std::erase_if(entries, [r](const auto& e) { return e.first == r; });
        entries.emplace_back(r, value);
        columns_[c] = SparseVector(std::move(entries));
    }

    Scalar get(Index r, Index c) const { return columns_.at(c).get(r); }

    std::size_t nnz() const
    {
        std::size_t total = 0;
        for (const auto& c : columns_) total += c.nnz();
        return total;
    }

    static SparseMatrix identity(Index k)
    {
        SparseMatrix m(k, k);
        for (Index i = 0; i < k; ++i) m.columns_[i] = SparseVector::unit(i);
        return m;
    }

    static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows)
    {
        Index nr = rows.size(), nc = nr ? rows.front().size() : 0;
        SparseMatrix m(nr, nc);
        for (Index c = 0; c < nc; ++c) {
            std::vector<SparseVector::Entry> col;
            for (Index r = 0; r < nr; ++r)
                if (rows[r].at(c) != 0) col.emplace_back(r, rows[r][c]);
            m.columns_[c] = SparseVector(std::move(col));
        }
        return m;
    }

    SparseMatrix transpose() const
    {
        std::vector<std::vector<SparseVector::Entry>> rows(rows_);
        for (Index c = 0; c < cols(); ++c)
            for (const auto& [r, v] : columns_[c].entries()) rows[r].emplace_back(c, v);
        SparseMatrix t(cols(), rows_);
        for (Index r = 0; r < rows_; ++r) t.columns_[r] = SparseVector(std::move(rows[r]));
        return t;
    }

    SparseVector apply(const SparseVector& x) const
    {
        std::vector<SparseVector::Entry> acc;
        for (const auto& [c, xc] : x.entries())
            for (const auto& [r, v] : columns_.at(c).entries()) acc.emplace_back(r, v * xc);
        return SparseVector(std::move(acc));
    }

    SparseMatrix operator*(const SparseMatrix& other) const
    {
        if (cols() != other.rows()) throw std::invalid_argument("dimension mismatch in product");
        SparseMatrix out(rows_, other.cols());
        for (Index c = 0; c < other.cols(); ++c) out.columns_[c] = apply(other.column(c));
        return out;
    }

  private:
    void check_column(const SparseVector& v) const
    {
        if (!v.is_zero() && v.entries().back().first >= rows_)
            throw std::out_of_range("column entry outside matrix rows");
    }

    Index rows_ = 0;
    std::vector<SparseVector> columns_;
};

namespace detail {

struct RationalOps {
    using value_type = mpq_class;
    value_type from(const Scalar& s) const { return s; }
    Scalar to_scalar(const value_type& v) const { return v; }
    static bool is_zero(const value_type& v) { return v == 0; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type inv(const value_type& a) const { return 1 / a; }
};

struct ModularOps {
    using value_type = std::uint32_t;
    std::uint32_t p;
    value_type from(const Scalar& s) const { return residue_mod(s, p); }
    Scalar to_scalar(value_type v) const { return Scalar(v); }
    static bool is_zero(value_type v) { return v == 0; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(std::uint64_t(a) * b % p);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type inv(value_type a) const
    {
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
};

template <class Ops>
using NativeVec = std::vector<std::pair<Index, typename Ops::value_type>>;

template <class Ops>
NativeVec<Ops> to_native(const Ops& ops, const SparseVector& v)
{
    NativeVec<Ops> out;
    out.reserve(v.nnz());
    for (const auto& [i, s] : v.entries()) {
        auto x = ops.from(s);
        if (!Ops::is_zero(x)) out.emplace_back(i, std::move(x));
    }
    return out;
}

template <class Ops>
SparseVector from_native(const Ops& ops, const NativeVec<Ops>& v)
{
    std::vector<SparseVector::Entry> out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) out.emplace_back(i, ops.to_scalar(x));
    return SparseVector(std::move(out));
}

/// a - c*b for sorted sparse vectors.
template <class Ops>
NativeVec<Ops> axpy(const Ops& ops, const NativeVec<Ops>& a, const typename Ops::value_type& c,
                    const NativeVec<Ops>& b)
{
    NativeVec<Ops> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else {
            auto cb = ops.mul(c, j->second);
            if (i != a.end() && i->first == j->first) {
                auto d = ops.sub(i->second, cb);
                if (!Ops::is_zero(d)) out.emplace_back(i->first, std::move(d));
                ++i;
            } else {
                typename Ops::value_type zero{};
                out.emplace_back(j->first, ops.sub(zero, cb));
            }
            ++j;
        }
    }
    return out;
}

template <class Ops>
typename Ops::value_type lookup(const NativeVec<Ops>& v, Index k)
{
    auto it = std::lower_bound(v.begin(), v.end(), k,
                               [](const auto& e, Index key) { return e.first < key; });
    if (it != v.end() && it->first == k) return it->second;
    return typename Ops::value_type{};
}

/**
 * Reduced row echelon form maintained under insertion.
 *
 * Every stored row has a unit pivot and zeros in all other pivot columns, so
 * reducing a vector is a single pass over its pivot-column entries.  With
 * tracking enabled each row also remembers which combination of inserted
 * vectors (identified by caller-chosen tags) it equals.
 */
template <class Ops>
class Echelon {
  public:
    using T = typename Ops::value_type;
    using Vec = NativeVec<Ops>;

    Echelon(Index dim, Ops ops, bool track) : ops_(std::move(ops)), dim_(dim), track_(track) {}

    Index dim() const { return dim_; }
    Index rank() const { return rows_.size(); }
    const Ops& ops() const { return ops_; }

    struct Reduced {
        Vec remainder;
        Vec combo;  // v - remainder = sum combo[tag] * inserted[tag]
    };

    Reduced reduce(const Vec& v) const
    {
        Reduced out;
        out.remainder = v;
        for (const auto& [k, x] : v) {
            auto it = pivot_row_.find(k);
            if (it == pivot_row_.end()) continue;
            const Row& row = rows_[it->second];
            out.remainder = axpy(ops_, out.remainder, x, row.values);
            if (track_) out.combo = axpy(ops_, out.combo, ops_.sub(T{}, x), row.combo);
        }
        return out;
    }

    /// Inserts v under the given tag; returns the relation if v is dependent.
    std::optional<Vec> insert(const Vec& v, Index tag = 0)
    {
        for (const auto& [k, x] : v)
            if (k >= dim_) throw std::out_of_range("vector index outside ambient dimension");
        Reduced r = reduce(v);
        if (r.remainder.empty()) {
            // tag - combo is a relation among inserted vectors
            Vec rel;
            if (track_) rel = axpy(ops_, Vec{{tag, one()}}, one(), r.combo);
            return rel;
        }
        Row row;
        T lead_inv = ops_.inv(r.remainder.front().second);
        row.values = scale(r.remainder, lead_inv);
        if (track_) row.combo = scale(axpy(ops_, Vec{{tag, one()}}, one(), r.combo), lead_inv);
        Index lead = row.values.front().first;
        for (auto& other : rows_) {
            T c = lookup<Ops>(other.values, lead);
            if (Ops::is_zero(c)) continue;
            other.values = axpy(ops_, other.values, c, row.values);
            if (track_) other.combo = axpy(ops_, other.combo, c, row.combo);
        }
        pivot_row_.emplace(lead, rows_.size());
        rows_.push_back(std::move(row));
        return std::nullopt;
    }

    /// Functional vanishing on the span and equal to 1 at non-pivot column q.
    Vec annihilator(Index q) const
    {
        if (pivot_row_.count(q)) throw std::invalid_argument("annihilator requested at a pivot column");
        Vec f{{q, one()}};
        for (const auto& [p, r] : pivot_row_) {
            T c = lookup<Ops>(rows_[r].values, q);
            if (!Ops::is_zero(c)) f = axpy(ops_, f, c, Vec{{p, one()}});
        }
        return f;
    }

  private:
    struct Row {
        Vec values;
        Vec combo;
    };

    T one() const { return ops_.from(Scalar(1)); }

    Vec scale(const Vec& v, const T& c) const
    {
        Vec out;
        out.reserve(v.size());
        for (const auto& [k, x] : v) out.emplace_back(k, ops_.mul(x, c));
        return out;
    }

    Ops ops_;
    Index dim_;
    bool track_;
    std::vector<Row> rows_;
    std::map<Index, Index> pivot_row_;
};

template <class Fn>
decltype(auto) with_ops(const Field& field, Fn&& fn)
{
    if (field.is_rational()) return fn(RationalOps{});
    return fn(ModularOps{field.characteristic()});
}

/// Rank over QQ by fraction-free elimination on integer rows.
inline Index integer_rank(const std::vector<SparseVector>& vectors, Index dim)
{
    using IVec = std::vector<std::pair<Index, Integer>>;
    std::vector<IVec> work;
    work.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.is_zero()) continue;
        Integer den_lcm = 1;
        for (const auto& [i, q] : v.entries()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        IVec row;
        for (const auto& [i, q] : v.entries()) {
            if (i >= dim) throw std::out_of_range("vector index outside ambient dimension");
            row.emplace_back(i, Integer(q.get_num() * (den_lcm / q.get_den())));
        }
        work.push_back(std::move(row));
    }
    // sparsest rows become pivots first
    std::stable_sort(work.begin(), work.end(), [](const IVec& a, const IVec& b) { return a.size() < b.size(); });

    auto make_primitive = [](IVec& r) {
        Integer g = 0;
        for (const auto& e : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g > 1)
            for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    };

    std::map<Index, IVec> pivots;
    for (auto& r : work) {
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                make_primitive(r);
                pivots.emplace(r.front().first, std::move(r));
                break;
            }
            const IVec& p = it->second;
            Integer g;
            mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), r.front().second.get_mpz_t());
            Integer a = p.front().second / g, b = r.front().second / g;
            IVec out;
            out.reserve(r.size() + p.size());
            auto i = r.cbegin();
            auto j = p.cbegin();
            while (i != r.cend() || j != p.cend()) {
                if (j == p.cend() || (i != r.cend() && i->first < j->first)) {
                    out.emplace_back(i->first, a * i->second);
                    ++i;
                } else if (i == r.cend() || j->first < i->first) {
                    out.emplace_back(j->first, -b * j->second);
                    ++j;
                } else {
                    Integer d = a * i->second - b * j->second;
                    if (d != 0) out.emplace_back(i->first, std::move(d));
                    ++i;
                    ++j;
                }
            }
            make_primitive(out);
            r = std::move(out);
        }
    }
    return pivots.size();
}

} // namespace detail

inline SparseVector normalized(SparseVector v, const Field& field)
{
    v.normalize(field);
    return v;
}

inline Index rank(const SparseMatrix& m, const Field& field)
{
    if (field.is_rational()) return detail::integer_rank(m.columns(), m.rows());
    detail::ModularOps ops{field.characteristic()};
    detail::Echelon<detail::ModularOps> ech(m.rows(), ops, false);
    for (const auto& c : m.columns()) ech.insert(detail::to_native(ops, c));
    return ech.rank();
}

/// Rank by plain Gaussian elimination over the field (cross-check of rank()).
inline Index rank_by_echelon(const SparseMatrix& m, const Field& field)
{
    return detail::with_ops(field, [&](auto ops) {
        detail::Echelon<decltype(ops)> ech(m.rows(), ops, false);
        for (const auto& c : m.columns()) ech.insert(detail::to_native(ops, c));
        return ech.rank();
    });
}

/// Basis of {v : M v = 0}; each vector has a unit entry at its own free column.
inline std::vector<SparseVector> kernel_basis(const SparseMatrix& m, const Field& field)
{
    return detail::with_ops(field, [&](auto ops) {
        detail::Echelon<decltype(ops)> ech(m.rows(), ops, true);
        std::vector<SparseVector> out;
        for (Index c = 0; c < m.cols(); ++c)
            if (auto rel = ech.insert(detail::to_native(ops, m.column(c)), c))
                out.push_back(detail::from_native(ops, *rel));
        return out;
    });
}

struct SpanResult {
    bool member = false;
    SparseVector coefficients;  // columns * coefficients = v, when member
    SparseVector certificate;   // f with f(columns) = 0 and f(v) != 0, otherwise
};

inline SpanResult in_span(const SparseVector& v, const SparseMatrix& columns, const Field& field)
{
    return detail::with_ops(field, [&](auto ops) {
        detail::Echelon<decltype(ops)> ech(columns.rows(), ops, true);
        for (Index c = 0; c < columns.cols(); ++c) ech.insert(detail::to_native(ops, columns.column(c)), c);
        auto r = ech.reduce(detail::to_native(ops, v));
        SpanResult out;
        if (r.remainder.empty()) {
            out.member = true;
            out.coefficients = detail::from_native(ops, r.combo);
        } else {
            out.certificate = detail::from_native(ops, ech.annihilator(r.remainder.front().first));
        }
        return out;
    });
}

/**
 * A subspace of F^dim with canonical coset representatives.
 *
 * reduce(v) is the unique vector congruent to v modulo the subspace that
 * vanishes on every pivot column; it is linear and idempotent.
 */
class Subspace {
  public:
    Subspace(Index dim, const Field& field) : field_(field)
    {
        if (field.is_rational())
            impl_.emplace<0>(dim, detail::RationalOps{}, false);
        else
            impl_.emplace<1>(dim, detail::ModularOps{field.characteristic()}, false);
    }

    template <class Fn>
    decltype(auto) visit(Fn&& fn) const
    {
        return std::visit(std::forward<Fn>(fn), impl_);
    }

    const Field& field() const { return field_; }
    Index dim() const { return visit([](const auto& e) { return e.rank(); }); }
    Index ambient_dim() const { return visit([](const auto& e) { return e.dim(); }); }

    /// Returns true when v enlarged the subspace.
    bool insert(const SparseVector& v)
    {
        return std::visit([&](auto& e) { return !e.insert(detail::to_native(e.ops(), v)).has_value(); }, impl_);
    }

    SparseVector reduce(const SparseVector& v) const
    {
        return visit([&](const auto& e) {
            return detail::from_native(e.ops(), e.reduce(detail::to_native(e.ops(), v)).remainder);
        });
    }

    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

  private:
    Field field_;
    std::variant<detail::Echelon<detail::RationalOps>, detail::Echelon<detail::ModularOps>> impl_{
        std::in_place_index<0>, 0, detail::RationalOps{}, false};
};

inline SparseVector quotient_reduce(const SparseVector& v, const SparseMatrix& subspace_basis,
                                    const Field& field)
{
    Subspace s(subspace_basis.rows(), field);
    for (const auto& c : subspace_basis.columns()) s.insert(c);
    return s.reduce(v);
}

/// Nonzero invariant factors of an integer matrix (Smith normal form diagonal).
inline std::vector<Integer> smith_invariant_factors(const SparseMatrix& m)
{
    const Index nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc, 0));
    for (Index c = 0; c < nc; ++c)
        for (const auto& [r, q] : m.column(c).entries()) {
            if (q.get_den() != 1) throw std::invalid_argument("Smith normal form needs integer entries");
            a[r][c] = q.get_num();
        }

    std::vector<Integer> diag;
    Index t = 0;
    while (t < nr && t < nc) {
        // smallest nonzero entry in the remaining block as pivot
        Index pr = nr, pc = nc;
        for (Index r = t; r < nr; ++r)
            for (Index c = t; c < nc; ++c)
                if (a[r][c] != 0 && (pr == nr || abs(a[r][c]) < abs(a[pr][pc]))) { pr = r; pc = c; }
        if (pr == nr) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (Index r = t + 1; r < nr; ++r) {
                if (a[r][t] == 0) continue;
                Integer q = a[r][t] / a[t][t];
                for (Index c = t; c < nc; ++c) a[r][c] -= q * a[t][c];
                if (a[r][t] != 0) {
                    std::swap(a[t], a[r]);
                    clean = false;
                }
            }
            for (Index c = t + 1; c < nc; ++c) {
                if (a[t][c] == 0) continue;
                Integer q = a[t][c] / a[t][t];
                for (Index r = t; r < nr; ++r) a[r][c] -= q * a[r][t];
                if (a[t][c] != 0) {
                    for (auto& row : a) std::swap(row[t], row[c]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: fold any entry not divisible by the pivot into row t
            for (Index r = t + 1; r < nr && clean; ++r)
                for (Index c = t + 1; c < nc; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        for (Index k = t; k < nc; ++k) a[t][k] += a[r][k];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

/// Coordinate-format Matrix Market dump; entries must be integers.
inline void write_matrix_market(std::ostream& os, const SparseMatrix& m)
{
    os << "%%MatrixMarket matrix coordinate integer general\n";
    os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    for (Index c = 0; c < m.cols(); ++c)
        for (const auto& [r, q] : m.column(c).entries()) {
            if (q.get_den() != 1) throw std::invalid_argument("Matrix Market dump needs integer entries");
            os << r + 1 << ' ' << c + 1 << ' ' << q.get_num().get_str() << '\n';
        }
}

} // namespace veronese
