/**
 * Integer partitions, Frobenius coordinates of self-conjugate partitions,
 * Schur polynomials and Schur expansions of symmetric polynomials.
 *
 * Symmetric polynomials are dense-enough maps from exponent vectors to
 * integer coefficients.  Expansion in the Schur basis peels off the
 * lexicographically largest (hence dominance-maximal) partition exponent at
 * each step, using Kostka numbers for the subtraction.
 */
#pragma once

#include "veronese/field.hpp"
#include "veronese/report.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace veronese {

class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    /// Drops trailing zeros; the rest must still be a valid partition.
    static Partition from_exponents(std::vector<int> exps)
    {
        while (!exps.empty() && exps.back() == 0) exps.pop_back();
        return Partition(std::move(exps));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// 1-based row length, 0 past the end.
    int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> cols;
    int first = lambda.row(1);
    for (int c = 1; c <= first; ++c) {
        int len = 0;
        while (lambda.row(len + 1) >= c) ++len;
        cols.push_back(len);
    }
    return Partition(std::move(cols));
}

inline bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

inline int durfee_size(const Partition& lambda)
{
    int s = 0;
    while (lambda.row(s + 1) >= s + 1) ++s;
    return s;
}

/// Diagonal arm lengths mu_1 > ... > mu_s >= 0 of a self-conjugate partition.
class FrobeniusForm {
  public:
    FrobeniusForm() = default;

    explicit FrobeniusForm(std::vector<int> arms) : arms_(std::move(arms))
    {
        for (std::size_t k = 0; k < arms_.size(); ++k) {
            if (arms_[k] < 0) throw std::invalid_argument("Frobenius arms must be non-negative");
            if (k > 0 && arms_[k] >= arms_[k - 1])
                throw std::invalid_argument("Frobenius arms must be strictly decreasing");
        }
    }

    const std::vector<int>& arms() const { return arms_; }
    int size() const { return static_cast<int>(arms_.size()); }
    int weight() const { return std::accumulate(arms_.begin(), arms_.end(), 0); }

    friend auto operator<=>(const FrobeniusForm&, const FrobeniusForm&) = default;

  private:
    std::vector<int> arms_;
};

inline FrobeniusForm frobenius(const Partition& lambda)
{
    if (!is_self_conjugate(lambda))
        throw std::invalid_argument("Frobenius form requested for a partition that is not self-conjugate");
    std::vector<int> arms;
    for (int i = 1; i <= durfee_size(lambda); ++i) arms.push_back(lambda.row(i) - i);
    return FrobeniusForm(std::move(arms));
}

inline Partition from_frobenius(const FrobeniusForm& mu)
{
    const auto& a = mu.arms();
    const int s = mu.size();
    std::vector<int> rows;
    for (int i = 1; i <= s; ++i) rows.push_back(a[i - 1] + i);
    // below the Durfee square, row i counts the diagonal hooks whose leg reaches it
    for (int i = s + 1;; ++i) {
        int len = 0;
        for (int k = 1; k <= s; ++k)
            if (a[k - 1] + k >= i) ++len;
        if (len == 0) break;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

/// Odd distinct parts (2 mu_1 + 1, ..., 2 mu_s + 1): the diagonal hook sizes.
inline std::vector<int> euler_image(const FrobeniusForm& mu)
{
    std::vector<int> out;
    for (int m : mu.arms()) out.push_back(2 * m + 1);
    return out;
}

/// The hook (m+1, 1^m).
inline Partition hook_partition(int m)
{
    std::vector<int> rows{m + 1};
    rows.insert(rows.end(), m, 1);
    return Partition(std::move(rows));
}

/// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = -1)
{
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, bound); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

/// Self-conjugate lambda with length(lambda) <= n, |lambda| = j and |mu| = i.
inline std::vector<Partition> self_conjugate_enum(int n, int i, int j)
{
    std::vector<Partition> out;
    std::vector<int> arms;
    // strictly decreasing non-negative sequences summing to i
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            // the smallest arm may additionally be 0
            for (int with_zero = 0; with_zero <= 1; ++with_zero) {
                auto a = arms;
                if (with_zero) a.push_back(0);
                if (a.empty()) {
                    if (j == 0) out.emplace_back();
                    continue;
                }
                Partition lambda = from_frobenius(FrobeniusForm(a));
                if (lambda.weight() == j && lambda.length() <= n) out.push_back(lambda);
            }
            return;
        }
        for (int m = std::min(remaining, bound); m >= 1; --m) {
            arms.push_back(m);
            self(self, remaining - m, m - 1);
            arms.pop_back();
        }
    };
    rec(rec, i, i);
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Hook-content formula; zero when length(lambda) > n.
inline Integer schur_dim(const Partition& lambda, int n)
{
    if (lambda.length() > n) return 0;
    Partition conj = conjugate(lambda);
    Integer num = 1, den = 1;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.row(r); ++c) {
            num *= n + c - r;
            den *= (lambda.row(r) - c) + (conj.row(c) - r) + 1;
        }
    return num / den;
}

using Exponent = std::vector<int>;

/// Polynomial with integer coefficients in a fixed number of variables.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Integer c)
    {
        Polynomial p(nvars);
        p.add_term(Exponent(nvars, 0), std::move(c));
        return p;
    }

    static Polynomial variable(int nvars, int k)
    {
        Exponent e(nvars, 0);
        e.at(k) = 1;
        Polynomial p(nvars);
        p.add_term(e, 1);
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<Exponent, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Exponent& e, const Integer& c)
    {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Sum of all coefficients (the number of monomials counted with multiplicity).
    Integer coefficient_sum() const
    {
        Integer s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        a.check(b);
        Polynomial out(a.nvars_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend Polynomial operator*(const Integer& c, const Polynomial& p)
    {
        Polynomial out(p.nvars_);
        for (const auto& [e, x] : p.terms_) out.add_term(e, c * x);
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

  private:
    void check(const Polynomial& o) const
    {
        if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials in different variable counts");
    }

    int nvars_ = 0;
    std::map<Exponent, Integer> terms_;
};

inline Polynomial elementary_symmetric(int k, int n)
{
    Polynomial p(n);
    std::vector<int> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + std::min(k, n), 1);
    if (k > n) return p;
    std::sort(pick.begin(), pick.end());
    do p.add_term(pick, 1);
    while (std::next_permutation(pick.begin(), pick.end()));
    return p;
}

namespace detail {

/// Partitions mu with lambda/mu a horizontal strip of the given size.
inline std::vector<Partition> horizontal_strip_removals(const Partition& lambda, int size)
{
    std::vector<Partition> out;
    const int len = lambda.length();
    std::vector<int> mu(len);
    // interlacing: lambda_{r+1} <= mu_r <= lambda_r
    auto rec = [&](auto&& self, int r, int remaining) -> void {
        if (r == len) {
            if (remaining == 0) out.push_back(Partition::from_exponents(mu));
            return;
        }
        int hi = lambda.row(r + 1), lo = lambda.row(r + 2);
        for (int m = hi; m >= lo; --m) {
            if (hi - m > remaining) break;
            mu[r] = m;
            self(self, r + 1, remaining - (hi - m));
        }
    };
    rec(rec, 0, size);
    return out;
}

} // namespace detail

/// Sum over semistandard tableaux of shape lambda with entries <= n of x^content.
inline Polynomial schur_poly(const Partition& lambda, int n)
{
    Polynomial out(n);
    if (lambda.length() > n) return out;
    Exponent e(n, 0);
    // entries equal to m occupy a horizontal strip; peel them off from n down
    auto rec = [&](auto&& self, const Partition& shape, int m) -> void {
        if (m == 0) {
            if (shape.empty()) out.add_term(e, 1);
            return;
        }
        if (shape.length() > m) return;
        for (int k = shape.weight(); k >= 0; --k) {
            for (const auto& mu : detail::horizontal_strip_removals(shape, k)) {
                e[m - 1] = k;
                self(self, mu, m - 1);
            }
        }
        e[m - 1] = 0;
    };
    rec(rec, lambda, n);
    return out;
}

/// Number of semistandard tableaux of shape lambda and content alpha.
inline Integer kostka(const Partition& lambda, const std::vector<int>& content)
{
    std::map<std::pair<Partition, int>, Integer> memo;
    auto rec = [&](auto&& self, const Partition& shape, int m) -> Integer {
        if (m == 0) return shape.empty() ? 1 : 0;
        if (shape.length() > m) return 0;
        auto key = std::make_pair(shape, m);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer total = 0;
        for (const auto& mu : detail::horizontal_strip_removals(shape, content[m - 1]))
            total += self(self, mu, m - 1);
        memo.emplace(key, total);
        return total;
    };
    int sum = std::accumulate(content.begin(), content.end(), 0);
    if (sum != lambda.weight()) return 0;
    return rec(rec, lambda, static_cast<int>(content.size()));
}

using SchurExpansion = std::map<Partition, Integer>;

/// Two exponents with different coefficients in a non-symmetric polynomial.
struct SymmetryWitness {
    Exponent first, second;
};

class NotSymmetric : public std::invalid_argument {
  public:
    NotSymmetric(SymmetryWitness w)
        : std::invalid_argument("polynomial is not symmetric"), witness(std::move(w))
    {
    }
    SymmetryWitness witness;
};

inline std::optional<SymmetryWitness> symmetry_violation(const Polynomial& f)
{
    const int n = f.nvars();
    for (const auto& [e, c] : f.terms()) {
        for (int k = 0; k + 1 < n; ++k) {
            if (e[k] == e[k + 1]) continue;
            Exponent swapped = e;
            std::swap(swapped[k], swapped[k + 1]);
            if (f.coefficient(swapped) != c) return SymmetryWitness{e, swapped};
        }
    }
    return std::nullopt;
}

/// Expansion in the Schur basis; negative multiplicities are kept.
inline SchurExpansion schur_expand(const Polynomial& f)
{
    if (auto w = symmetry_violation(f)) throw NotSymmetric(*w);
    const int n = f.nvars();
    // a symmetric polynomial is determined by its partition-shaped exponents
    std::map<Exponent, Integer, std::greater<>> dominant;
    for (const auto& [e, c] : f.terms())
        if (std::is_sorted(e.begin(), e.end(), std::greater<>())) dominant.emplace(e, c);

    SchurExpansion out;
    while (!dominant.empty()) {
        auto [alpha, c] = *dominant.begin();
        Partition lambda = Partition::from_exponents(alpha);
        out[lambda] += c;
        for (const auto& beta : partitions_of(lambda.weight())) {
            if (beta > lambda || beta.length() > n) continue;
            Exponent b = beta.parts();
            b.resize(n, 0);
            Integer k = kostka(lambda, b);
            if (k == 0) continue;
            auto [it, inserted] = dominant.emplace(b, -c * k);
            if (!inserted) {
                it->second -= c * k;
                if (it->second == 0) dominant.erase(it);
            }
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline std::string format_partition(const Partition& lambda)
{
    if (lambda.empty()) return "0";
    std::ostringstream os;
    for (int k = 0; k < lambda.length(); ++k) os << (k ? "," : "") << lambda.parts()[k];
    return os.str();
}

inline Partition parse_partition(const std::string& text)
{
    if (text == "0" || text.empty()) return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad partition '" + text + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

inline json to_json(const Partition& lambda) { return lambda.parts(); }

inline json to_json(const SchurExpansion& e)
{
    json out = json::object();
    for (const auto& [lambda, m] : e) out[format_partition(lambda)] = m.get_str();
    return out;
}

/**
 * With dim V = mu_1 + 1, s^nu * s^lambdahat contains s^lambda and no other
 * self-conjugate constituent, where nu is the first diagonal hook and
 * lambdahat the partition left after removing it.
 */
inline Report lr_selfconjugate_check(const Partition& lambda)
{
    Report report("lr");
    FrobeniusForm mu = frobenius(lambda);
    if (mu.size() == 0) throw std::invalid_argument("LR check needs a non-empty partition");
    const int m1 = mu.arms().front();
    const int n = m1 + 1;
    Partition nu = hook_partition(m1);
    Partition hat = from_frobenius(FrobeniusForm(std::vector<int>(mu.arms().begin() + 1, mu.arms().end())));

    SchurExpansion expansion = schur_expand(schur_poly(nu, n) * schur_poly(hat, n));
    json inputs = {{"lambda", to_json(lambda)}, {"nu", to_json(nu)}, {"lambda_hat", to_json(hat)}, {"n", n}};

    Integer own = expansion.count(lambda) ? expansion.at(lambda) : Integer(0);
    report.add("contains_lambda", inputs, ">= 1", own.get_str(), own >= 1);

    json others = json::array();
    bool negative = false;
    for (const auto& [rho, mult] : expansion) {
        if (mult < 0) negative = true;
        if (rho != lambda && is_self_conjugate(rho)) others.push_back(format_partition(rho));
    }
    report.add("no_other_self_conjugate", inputs, json::array(), others, others.empty());
    report.add("expansion_nonnegative", inputs, true, to_json(expansion), !negative);
    return report;
}

} // namespace veronese
