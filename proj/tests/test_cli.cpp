#include "veronese/commands.hpp"

#include <gtest/gtest.h>

using namespace veronese;

namespace {

RunConfig config(int n)
{
    RunConfig cfg;
    cfg.n = n;
    return cfg;
}

} // namespace

TEST(Config, Validation)
{
    auto cfg = config(2);
    EXPECT_NO_THROW(cfg.validate());
    cfg.characteristic = 4;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = config(0);
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = config(9);
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = config(2);
    cfg.jmax = -1;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Betti, TwoVariablesMatchPrediction)
{
    auto cfg = config(2);
    cfg.jmax = 10;
    auto res = cmd_betti(cfg);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.report["failures"], 0);
    EXPECT_EQ(res.report["command"], "betti");
    EXPECT_EQ(res.report["config"]["jmax"], 10);
    EXPECT_FALSE(res.report["checks"].empty());
}

TEST(Betti, OneVariable)
{
    auto cfg = config(1);
    cfg.jmax = 4;
    KoszulComplex kc(1, Field::rationals());
    auto cells = betti_table(kc, 2, 4);
    for (const auto& c : cells) {
        Index expected = c.i == 0 && c.j <= 1 ? 1 : 0;
        EXPECT_EQ(c.dim, expected) << c.i << "," << c.j;
        EXPECT_TRUE(c.match());
    }
    // one quad only: nothing above homological degree 1
    for (const auto& c : cells) EXPECT_LE(c.i, 1);
    EXPECT_EQ(cmd_betti(cfg).exit_code, 0);
}

TEST(Betti, EmptyRange)
{
    KoszulComplex kc(2, Field::rationals());
    EXPECT_TRUE(betti_table(kc, -1, 5).empty());
    EXPECT_TRUE(betti_table(kc, 3, -1).empty());
}

TEST(Betti, PositiveCharacteristicNeverFails)
{
    auto cfg = config(3);
    cfg.characteristic = 2;
    cfg.jmax = 6;
    auto res = cmd_betti(cfg);
    EXPECT_EQ(res.exit_code, 0);
    for (const auto& c : res.report["checks"]) EXPECT_TRUE(c["experiment"]);
}

TEST(Verify, ExamplesPass)
{
    auto cfg = config(4);
    cfg.t = 2;
    cfg.seed = 7;
    auto g = cmd_verify(cfg, "garnir");
    EXPECT_EQ(g.exit_code, 0) << g.text;
    EXPECT_EQ(g.report["config"]["seed"], 7);

    EXPECT_EQ(cmd_verify(config(1), "char2").exit_code, 0);

    auto cfg3 = config(3);
    cfg3.jmax = 9;
    auto d = cmd_verify(cfg3, "decomposition");
    EXPECT_EQ(d.exit_code, 0) << d.text;
    EXPECT_EQ(d.report["failures"], 0);
}

TEST(Verify, EverySuiteRunsOnSmallInput)
{
    auto cfg = config(3);
    cfg.t = 2;
    cfg.jmax = 6;
    cfg.imax = 2;
    for (const auto& s : verify_suites()) {
        auto res = cmd_verify(cfg, s);
        EXPECT_EQ(res.exit_code, 0) << s << "\n" << res.text;
        EXPECT_EQ(res.report["command"], "verify " + s);
        EXPECT_TRUE(res.report["checks"].is_array());
    }
    EXPECT_THROW(cmd_verify(cfg, "nonsense"), std::invalid_argument);
}

TEST(Verify, ExperimentsOverPrimeFields)
{
    auto cfg = config(3);
    cfg.characteristic = 3;
    cfg.t = 2;
    auto res = cmd_verify(cfg, "strand");
    EXPECT_EQ(res.exit_code, 0);
    for (const auto& c : res.report["checks"]) EXPECT_TRUE(c["experiment"]);
    EXPECT_THROW(cmd_verify(cfg, "isotypic"), std::invalid_argument);
}

TEST(Verify, ExitCodeFollowsFailures)
{
    Report r("x");
    r.add("ok", {}, 1, 1, true);
    r.add_experiment("note", {}, 5);
    EXPECT_EQ(from_report("x", config(2), r).exit_code, 0);
    r.add("bad", {}, 1, 2, false);
    auto res = from_report("x", config(2), r);
    EXPECT_EQ(res.exit_code, 1);
    EXPECT_EQ(res.report["failures"], 1);
}

TEST(Verify, DeterministicOutput)
{
    auto cfg = config(3);
    cfg.t = 2;
    cfg.seed = 11;
    for (const std::string s : {"garnir", "straighten", "matching"}) {
        auto a = cmd_verify(cfg, s), b = cmd_verify(cfg, s);
        EXPECT_EQ(a.output(true), b.output(true));
        EXPECT_EQ(a.output(false), b.output(false));
    }
    cfg.jmax = 5;
    EXPECT_EQ(cmd_betti(cfg).output(true), cmd_betti(cfg).output(true));
}

TEST(Cycle, PrintsElements)
{
    auto cfg = config(2);
    cfg.check_cycle = true;
    auto z1 = cmd_cycle(cfg, "Z", "1");
    EXPECT_EQ(z1.report["text"], "x^(1,0)⊗[22] - x^(0,1)⊗[12]");
    EXPECT_EQ(z1.exit_code, 0);
    EXPECT_EQ(z1.report["bidegree"], json::parse("[1,3]"));
    auto z = cmd_cycle(cfg, "z", "1,2|2");
    EXPECT_EQ(z.report["text"], "-x^(1,0)⊗[22] + x^(0,1)⊗[12]");
    auto p = cmd_cycle(cfg, "product", "0,1");
    EXPECT_EQ(p.report["text"], "x^(2,0)⊗[22] - x^(1,1)⊗[12]");
    EXPECT_EQ(element_from_json(p.report["element"], 2, Field::rationals()),
              hook_cycle(0, 2, Field::rationals()) * hook_cycle(1, 2, Field::rationals()));
    EXPECT_THROW(cmd_cycle(cfg, "Z", "2"), std::invalid_argument);
    EXPECT_THROW(cmd_cycle(cfg, "Z", "1x"), std::invalid_argument);
    EXPECT_THROW(cmd_cycle(cfg, "w", "1"), std::invalid_argument);
}

TEST(Matching, ExportForms)
{
    auto cfg = config(5);
    auto faces = cmd_matching(cfg, "faces", 0);
    EXPECT_EQ(faces.report["faces"]["0"].size(), 10u);
    EXPECT_EQ(faces.report["faces"]["1"].size(), 15u);
    auto bd = cmd_matching(cfg, "boundary", 1);
    EXPECT_EQ(bd.text.rfind("%%MatrixMarket matrix coordinate integer general\n10 15 30\n", 0), 0u);
    EXPECT_EQ(bd.report["boundary"]["entries"].size(), 30u);
    cfg.torsion = true;
    auto h = cmd_matching(cfg, "homology", 0);
    EXPECT_NE(h.text.find("H~_1 rank 6"), std::string::npos);
    EXPECT_THROW(cmd_matching(cfg, "boundary", 4), std::invalid_argument);
}
