#include "veronese/cycles.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace veronese;
using gen::random_form;
using gen::random_indices;

namespace {

const Field QQ = Field::rationals();

oracle::Expansion as_expansion(const KoszulElement& u)
{
    oracle::Expansion out;
    const auto& qt = quad_table(u.n());
    for (const auto& [k, c] : u.terms()) {
        oracle::Term t{exps_vector(k.mono, u.n()), {}};
        for (int q : wedge_indices(k.wedge)) t.wedge.emplace_back(qt.quad(q).a, qt.quad(q).b);
        out[t] = c;
    }
    return out;
}

KoszulElement term(int n, const Scalar& c, std::vector<int> exps, std::vector<QuadMonomial> quads, Field f = QQ)
{
    return KoszulElement::monomial(n, f, c, exps, quads);
}

std::vector<oracle::Row> rows(const std::vector<LinearForm>& fs)
{
    std::vector<oracle::Row> out;
    for (const auto& f : fs) out.emplace_back(f.coeffs().begin(), f.coeffs().end());
    return out;
}

} // namespace

TEST(HookCycle, Examples)
{
    EXPECT_EQ(hook_cycle(0, 3, QQ), term(3, 1, {1, 0, 0}, {}));
    EXPECT_EQ(hook_cycle(1, 2, QQ), term(2, 1, {1, 0}, {{2, 2}}) - term(2, 1, {0, 1}, {{1, 2}}));
    auto z2 = term(3, 1, {1, 0, 0}, {{2, 3}, {3, 3}}) - term(3, 1, {0, 1, 0}, {{1, 3}, {3, 3}}) +
              term(3, 1, {0, 0, 1}, {{1, 3}, {2, 3}});
    EXPECT_EQ(hook_cycle(2, 3, QQ), z2);
    EXPECT_THROW(hook_cycle(3, 3, QQ), std::invalid_argument);
}

TEST(HookCycle, CyclesOfExpectedDegrees)
{
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < n; ++i) {
            auto z = hook_cycle(i, n, QQ);
            EXPECT_EQ(as_expansion(z), oracle::hook_expansion(i, n));
            EXPECT_TRUE(differential(z).is_zero());
            EXPECT_TRUE(oracle::differential(oracle::hook_expansion(i, n)).empty());
            ASSERT_TRUE(z.bidegree());
            EXPECT_EQ(z.bidegree()->i, i);
            EXPECT_EQ(z.bidegree()->j, 2 * i + 1);
            std::vector<int> md(n, 0);
            for (int k = 0; k < i; ++k) md[k] = 1;
            md[i] = i + 1;
            ASSERT_EQ(z.multidegrees().size(), 1u);
            EXPECT_EQ(exps_vector(*z.multidegrees().begin(), n), md);
        }
}

TEST(ZCycle, Examples)
{
    EXPECT_EQ(z_cycle({1}, {}, 2, QQ), hook_cycle(0, 2, QQ));
    EXPECT_EQ(z_cycle({1, 2}, {2}, 2, QQ), -hook_cycle(1, 2, QQ));
}

TEST(ZCycle, HookCyclesUpToFactorial)
{
    for (int t = 0; t <= 3; ++t) {
        int n = t + 1;
        std::vector<int> a(t + 1), b(t, t + 1);
        std::iota(a.begin(), a.end(), 1);
        Scalar f = 1;
        for (int k = 2; k <= t; ++k) f *= k;
        if (t % 2) f = -f;
        EXPECT_EQ(z_cycle(a, b, n, QQ), f * hook_cycle(t, n, QQ)) << t;
    }
}

TEST(ZCycle, GeneralLinearFormsAgainstExpansionOracle)
{
    std::mt19937 rng(50);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + trial % 4, t = trial % 4;
        CyclePair p;
        for (int k = 0; k <= t; ++k) p.a.push_back(random_form(rng, n));
        for (int k = 0; k < t; ++k) p.b.push_back(random_form(rng, n));
        auto z = z_cycle(p, n, QQ);
        auto expected = oracle::z_expansion(rows(p.a), rows(p.b));
        EXPECT_EQ(as_expansion(z), expected);
        EXPECT_TRUE(differential(z).is_zero());
        EXPECT_TRUE(oracle::differential(expected).empty());
        if (!z.is_zero()) {
            EXPECT_EQ(z.bidegree()->i, t);
            EXPECT_EQ(z.bidegree()->j, 2 * t + 1);
        }
    }
}

TEST(ZCycle, MultilinearAlternatingSymmetric)
{
    std::mt19937 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 3, t = 1 + trial % 3;
        CyclePair p;
        for (int k = 0; k <= t; ++k) p.a.push_back(random_form(rng, n));
        for (int k = 0; k < t; ++k) p.b.push_back(random_form(rng, n));
        auto z = z_cycle(p, n, QQ);

        // linear in a_0 and in b_0
        auto f = random_form(rng, n);
        std::vector<Scalar> sum(n);
        for (int k = 0; k < n; ++k) sum[k] = p.a[0][k] + 3 * f[k];
        CyclePair pa = p, pf = p;
        pa.a[0] = LinearForm(sum);
        pf.a[0] = f;
        EXPECT_EQ(z_cycle(pa, n, QQ), z + Scalar(3) * z_cycle(pf, n, QQ));
        for (int k = 0; k < n; ++k) sum[k] = p.b[0][k] - 2 * f[k];
        CyclePair pb = p, pg = p;
        pb.b[0] = LinearForm(sum);
        pg.b[0] = f;
        EXPECT_EQ(z_cycle(pb, n, QQ), z - Scalar(2) * z_cycle(pg, n, QQ));

        CyclePair swapped = p;
        std::swap(swapped.a[0], swapped.a[t]);
        EXPECT_EQ(z_cycle(swapped, n, QQ), -z);
        if (t >= 2) {
            swapped = p;
            std::swap(swapped.b[0], swapped.b[t - 1]);
            EXPECT_EQ(z_cycle(swapped, n, QQ), z);
        }
    }
}

TEST(ZCycle, RejectsMismatchedLengths)
{
    EXPECT_THROW(z_cycle({1, 2}, {}, 2, QQ), std::invalid_argument);
}

TEST(SquarefreeProducts, Examples)
{
    KoszulComplex k3(3, QQ);
    EXPECT_EQ(squarefree_Z_product({0}, 3, QQ), hook_cycle(0, 3, QQ));
    EXPECT_TRUE(k3.class_is_nonzero(squarefree_Z_product({0}, 3, QQ)));
    auto full = squarefree_Z_product({2, 0, 1}, 3, QQ);
    TermKey T;
    T.mono = make_exps({1, 1, 1});
    T.wedge = (Wedge(1) << quad_table(3).index(1, 2)) | (Wedge(1) << quad_table(3).index(1, 3)) |
              (Wedge(1) << quad_table(3).index(2, 3));
    EXPECT_EQ(abs(full.coefficient(T)), 1);
    EXPECT_TRUE(k3.class_is_nonzero(full));

    KoszulComplex k4(4, QQ);
    EXPECT_TRUE(k4.class_is_nonzero(squarefree_Z_product({0, 1, 2, 3}, 4, QQ)));
    EXPECT_THROW(squarefree_Z_product({0, 0}, 3, QQ), std::invalid_argument);
}

TEST(SquarefreeProducts, AllSubsetsNonzeroUpToFour)
{
    for (int n = 1; n <= 4; ++n) {
        KoszulComplex kc(n, QQ);
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> s;
            for (int k = 0; k < n; ++k)
                if (mask >> k & 1) s.push_back(k);
            EXPECT_TRUE(kc.class_is_nonzero(squarefree_Z_product(s, n, QQ))) << n << " " << mask;
        }
    }
}

TEST(SquarefreeProducts, TermCheck)
{
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(squarefree_term_check(n).ok()) << n;
}

TEST(Garnir, SmallestCase)
{
    EXPECT_TRUE(garnir_sum({1, 2, 3}, {}, 3, QQ).is_zero());
    // the individual terms are nonzero
    EXPECT_FALSE(z_cycle({2, 3}, {1}, 3, QQ).is_zero());
    EXPECT_THROW(garnir_sum({1, 2}, {}, 2, QQ), std::invalid_argument);
}

TEST(Garnir, ExhaustiveSmall)
{
    for (auto f : {QQ, Field::prime(2), Field::prime(3)})
        for (int n = 1; n <= 3; ++n)
            for (int t = 1; t <= 2; ++t) {
                const int len = 2 * t + 1;
                std::vector<int> idx(len, 1);
                while (true) {
                    std::vector<int> a(idx.begin(), idx.begin() + t + 2), b(idx.begin() + t + 2, idx.end());
                    ASSERT_TRUE(garnir_sum(a, b, n, f).is_zero());
                    int pos = 0;
                    while (pos < len && ++idx[pos] > n) idx[pos++] = 1;
                    if (pos == len) break;
                }
            }
}

TEST(Garnir, RandomWithRepeats)
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 3, t = 1 + trial % 3;
        auto a = random_indices(rng, t + 2, n), b = random_indices(rng, t - 1, n);
        for (auto f : {QQ, Field::prime(2), Field::prime(3)}) EXPECT_TRUE(garnir_sum(a, b, n, f).is_zero());
    }
}

TEST(Tableaux, Counts)
{
    EXPECT_EQ(tableau_generators(2, 1).size(), 2u);
    EXPECT_EQ(tableau_generators(2, 1)[0], (TableauPair{{1, 2}, {1}}));
    EXPECT_EQ(tableau_generators(2, 1)[1], (TableauPair{{1, 2}, {2}}));
    EXPECT_EQ(tableau_generators(3, 1).size(), 8u);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(tableau_generators(n, 0).size(), static_cast<std::size_t>(n));
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t <= 4; ++t) {
            // brute force over all index tuples
            std::size_t count = 0;
            const int len = 2 * t + 1;
            std::vector<int> idx(len, 1);
            while (true) {
                bool ok = true;
                for (int k = 1; k <= t; ++k) ok = ok && idx[k] > idx[k - 1];
                for (int k = t + 2; k < len; ++k) ok = ok && idx[k] >= idx[k - 1];
                if (t > 0) ok = ok && idx[0] <= idx[t + 1];
                count += ok;
                int pos = 0;
                while (pos < len && ++idx[pos] > n) idx[pos++] = 1;
                if (pos == len) break;
            }
            EXPECT_EQ(tableau_generators(n, t).size(), count);
            Integer sd = t + 1 <= n ? schur_dim(hook_partition(t), n) : Integer(0);
            EXPECT_EQ(Integer(static_cast<unsigned long>(count)), sd);
        }
}

TEST(Straighten, IdentityOnTableaux)
{
    for (const auto& p : tableau_generators(3, 2)) {
        auto r = straighten(p.a, p.b, 3, QQ);
        EXPECT_EQ(r.depth, 0);
        ASSERT_EQ(r.coefficients.size(), 1u);
        EXPECT_EQ(r.coefficients.begin()->first, p);
        EXPECT_EQ(r.coefficients.begin()->second, 1);
        EXPECT_EQ(omega(p.a, p.b), 0);
    }
}

TEST(Straighten, SmallestViolation)
{
    EXPECT_EQ(omega({2, 3}, {1}), 1);
    auto r = straighten({2, 3}, {1}, 3, QQ);
    for (const auto& [p, c] : r.coefficients) EXPECT_EQ(omega(p.a, p.b), 0);
    EXPECT_EQ(expand(r.coefficients, 3, QQ), z_cycle({2, 3}, {1}, 3, QQ));
    EXPECT_EQ(to_json(r.coefficients).dump(), R"({"z[1,2|3]":"-1","z[1,3|2]":"1"})");
}

TEST(Straighten, RandomNonTableauInputs)
{
    std::mt19937 rng(100);
    int done = 0;
    while (done < 50) {
        std::uniform_int_distribution<int> nd(2, 4);
        int n = nd(rng), t = std::uniform_int_distribution<int>(1, std::min(3, n - 1))(rng);
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> a(all.begin(), all.begin() + t + 1);
        std::sort(a.begin(), a.end());
        auto b = random_indices(rng, t, n);
        std::sort(b.begin(), b.end());
        int w = omega(a, b);
        if (w == 0) continue;
        ++done;
        for (auto f : {QQ, Field::prime(2), Field::prime(3)}) {
            auto r = straighten(a, b, n, f);
            EXPECT_LE(r.depth, w);
            for (const auto& [p, c] : r.coefficients) EXPECT_EQ(omega(p.a, p.b), 0);
            EXPECT_EQ(expand(r.coefficients, n, f), z_cycle(a, b, n, f));
        }
    }
}

TEST(Straighten, RejectsUnsortedInput)
{
    EXPECT_THROW(straighten({2, 1}, {1}, 3, QQ), std::invalid_argument);
    EXPECT_THROW(straighten({1, 2}, {4}, 3, QQ), std::invalid_argument);
}

TEST(Strand, SpanChecks)
{
    auto r = strand_span_check(2, 1, QQ);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(homology_dim(2, 1, 3, QQ), 2u);
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t <= 3; ++t) EXPECT_TRUE(strand_span_check(n, t, QQ).ok()) << n << " " << t;
    // n = 3, t = 2: hook-content for (3,1,1) gives 3*4*5*2*1 / (5*2*1*2*1) = 6
    EXPECT_EQ(homology_dim(3, 2, 5, QQ), 6u);
    EXPECT_EQ(tableau_generators(3, 3).size(), 0u);
}

TEST(Strand, PositiveCharacteristicRecordedOnly)
{
    auto r = strand_span_check(3, 1, Field::prime(3));
    EXPECT_TRUE(r.ok());
    for (const auto& c : r.checks()) EXPECT_TRUE(c.experiment);
}

TEST(PairText, RoundTrip)
{
    TableauPair p{{1, 2}, {2}};
    EXPECT_EQ(format_pair(p), "z[1,2|2]");
    EXPECT_EQ(parse_pair("z[1,2|2]"), p);
    EXPECT_EQ(parse_pair("1,2|2"), p);
    EXPECT_EQ(parse_pair("3|"), (TableauPair{{3}, {}}));
    EXPECT_THROW(parse_pair("1,2"), std::invalid_argument);
    EXPECT_THROW(parse_pair("1|2"), std::invalid_argument);
}
