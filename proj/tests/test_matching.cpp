#include "veronese/matching.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace veronese;

namespace {

const Field QQ = Field::rationals();

// Faces by brute force: every subset of pairs, kept when pairwise disjoint.
std::vector<std::size_t> face_counts_oracle(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    std::vector<std::size_t> counts;
    for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
        std::vector<int> seen(n + 1, 0);
        bool ok = true;
        int size = 0;
        for (std::size_t k = 0; k < pairs.size() && ok; ++k)
            if (mask >> k & 1) {
                ++size;
                ok = !seen[pairs[k].first]++ && !seen[pairs[k].second]++;
            }
        if (!ok) continue;
        if (counts.size() <= static_cast<std::size_t>(size)) counts.resize(size + 1);
        ++counts[size];
    }
    return counts;
}

} // namespace

TEST(Matching, SmallComplexes)
{
    auto d3 = matching_complex(3);
    EXPECT_EQ(d3.count(0), 3u);
    EXPECT_EQ(d3.count(1), 0u);
    auto d4 = matching_complex(4);
    EXPECT_EQ(d4.count(0), 6u);
    EXPECT_EQ(d4.count(1), 3u);
    auto d5 = matching_complex(5);
    EXPECT_EQ(d5.count(0), 10u);
    EXPECT_EQ(d5.count(1), 15u);
    EXPECT_EQ(d5.count(2), 0u);
    EXPECT_EQ(matching_complex(1).count(0), 0u);
    EXPECT_EQ(matching_complex(1).count(-1), 1u);
    EXPECT_THROW(matching_complex(0), std::invalid_argument);
}

TEST(Matching, FaceCountsMatchBruteForce)
{
    for (int n = 1; n <= 7; ++n) {
        auto cx = matching_complex(n);
        auto counts = face_counts_oracle(n);
        for (std::size_t s = 0; s < counts.size(); ++s) EXPECT_EQ(cx.count(static_cast<int>(s) - 1), counts[s]);
        EXPECT_EQ(cx.top_dim(), static_cast<int>(counts.size()) - 2);
    }
}

TEST(Matching, BoundarySquaredVanishes)
{
    for (int n = 1; n <= 7; ++n) {
        auto cx = matching_complex(n);
        for (int d = 1; d <= cx.top_dim(); ++d) {
            auto prod = cx.boundary(d - 1) * cx.boundary(d);
            EXPECT_EQ(prod.nnz(), 0u) << n << " " << d;
        }
    }
}

TEST(Matching, EulerCharacteristic)
{
    for (int n = 1; n <= 6; ++n) {
        auto cx = matching_complex(n);
        long faces = 0, homology = 0;
        for (int d = -1; d <= cx.top_dim(); ++d) {
            long sign = (d + 1) % 2 ? -1 : 1;
            faces += sign * static_cast<long>(cx.count(d));
            homology += sign * static_cast<long>(reduced_homology(cx, d, QQ).rank);
        }
        EXPECT_EQ(faces, homology) << n;
    }
}

TEST(Matching, HomologyExamples)
{
    EXPECT_EQ(reduced_homology(3, 0, QQ), 2u);
    EXPECT_EQ(reduced_homology(5, 1, QQ), 6u);
    for (auto f : {QQ, Field::prime(2), Field::prime(3)}) EXPECT_EQ(reduced_homology(5, 0, f), 0u);
    EXPECT_EQ(reduced_homology(1, -1, QQ), 1u);
    EXPECT_EQ(reduced_homology(2, -1, QQ), 0u);
    EXPECT_EQ(reduced_homology(2, 0, QQ), 0u);
    // Delta_4: three disjoint edges
    EXPECT_EQ(reduced_homology(4, 0, QQ), 2u);
}

TEST(Matching, TorsionInSeven)
{
    auto cx = matching_complex(7);
    auto h = reduced_homology(cx, 1, QQ, true);
    ASSERT_EQ(h.torsion.size(), 1u);
    EXPECT_EQ(h.torsion[0], 3);
    EXPECT_EQ(reduced_homology(cx, 1, Field::prime(3)).rank, h.rank + 1);
    EXPECT_EQ(reduced_homology(cx, 1, Field::prime(2)).rank, h.rank);
    EXPECT_TRUE(reduced_homology(matching_complex(5), 1, QQ, true).torsion.empty());
}

TEST(Matching, Petersen)
{
    auto r = petersen_check();
    EXPECT_TRUE(r.ok()) << r.checks_json().dump(1);
    EXPECT_EQ(r.checks().size(), 7u);
}

TEST(SquarefreeSlice, Examples)
{
    EXPECT_EQ(homology_dim(5, 2, all_ones(5), QQ), 6u);
    EXPECT_EQ(homology_dim(4, 1, all_ones(4), QQ), 2u);
    EXPECT_EQ(reduced_homology(4, 0, QQ), 2u);
    EXPECT_EQ(homology_dim(3, 3, all_ones(3), QQ), 0u);
    EXPECT_EQ(reduced_homology(3, 2, QQ), 0u);
}

TEST(SquarefreeSlice, CompareUpToSix)
{
    for (int n = 1; n <= 6; ++n)
        for (auto f : {QQ, Field::prime(2)}) EXPECT_TRUE(squarefree_slice_compare(n, f).ok()) << n;
}

TEST(SquarefreeSlice, MatchesDenseOracleOnWholeDegree)
{
    // n = 3, 4: squarefree slice is a summand of the whole degree-n homology
    for (int n = 3; n <= 4; ++n)
        for (int i = 0; 2 * i <= n; ++i)
            EXPECT_LE(homology_dim(n, i, all_ones(n), QQ), static_cast<Index>(oracle::koszul_homology_dim(n, i, n)));
}

TEST(Char2, Witness)
{
    auto r = char2_witness();
    EXPECT_TRUE(r.ok()) << r.checks_json().dump(1);
    auto z = char2_element(QQ);
    EXPECT_EQ(z.size(), 5u);
    EXPECT_TRUE(differential(z).is_zero());
}

TEST(Char2, FunctionalIsAnIntegerStatement)
{
    // each squarefree generator has six terms with coefficients +-1 over QQ
    for (const auto& g : char2_generators(QQ)) {
        EXPECT_EQ(g.size(), 6u);
        for (const auto& [k, c] : g.terms()) EXPECT_EQ(abs(c), 1);
    }
}

TEST(Export, FacesJsonAndMatrixMarket)
{
    auto cx = matching_complex(4);
    auto j = faces_json(cx, 4);
    EXPECT_EQ(j["-1"], json::parse("[[]]"));
    EXPECT_EQ(j["1"][0], json::parse("[[1,2],[3,4]]"));
    std::ostringstream os;
    write_matrix_market(os, cx.boundary(1));
    EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "%%MatrixMarket matrix coordinate integer general");
}
