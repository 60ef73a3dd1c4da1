/**
 * Exact scalar fields: the rationals and the prime fields GF(p).
 *
 * Every scalar in the library is carried as a GMP rational.  Over GF(p) a
 * scalar is kept in canonical form, an integer in [0, p).  Linear algebra
 * kernels convert to a native representation internally (see linalg.hpp).
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace veronese {

using Scalar = mpq_class;
using Integer = mpz_class;

inline bool is_prime(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Residue of q in [0, p); throws when the denominator vanishes mod p.
inline std::uint32_t residue_mod(const Scalar& q, std::uint32_t p)
{
    unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    if (mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0) return static_cast<std::uint32_t>(num);
    unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) throw std::domain_error("denominator divisible by the field characteristic");
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(num * inv % p);
}

class Field {
  public:
    Field() = default;

    static Field rationals() { return Field{}; }

    static Field prime(std::uint32_t p)
    {
        if (!is_prime(p))
            throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                        " is not prime");
        if (p >= (1u << 31))
            throw std::invalid_argument("field characteristic must be below 2^31");
        Field f;
        f.p_ = p;
        return f;
    }

    /// 0 builds the rationals, anything else must be prime.
    static Field of_characteristic(std::uint32_t p)
    {
        return p == 0 ? rationals() : prime(p);
    }

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    Scalar normalize(const Scalar& q) const
    {
        if (p_ == 0) return q;
        return Scalar(residue(q));
    }

    std::uint32_t residue(const Scalar& q) const { return residue_mod(q, p_); }

    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }

    std::string name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

    friend bool operator==(const Field&, const Field&) = default;

  private:
    std::uint32_t p_ = 0;
};

inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline Scalar parse_scalar(const std::string& s)
{
    Scalar q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace veronese
