#include <mlbeta/verify.hpp>

#include <frozen_constants.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace mlbeta;
using namespace mlbeta::verify;

TEST(Sweep, EmptySuite)
{
    const auto rep = run_sweep({});
    EXPECT_TRUE(rep.cases.empty());
    EXPECT_TRUE(rep.summary.empty());
    EXPECT_TRUE(rep.ok());
}

TEST(Sweep, InvalidGridPointsAreSkipped)
{
    Grid g;
    g.mu_nu = {{0.0, 0.0}, {1.0, 0.5}};
    const auto rep = run_sweep({TheoremId::EX3_1}, g, {}, {1});
    const auto& t = rep.summary.at(TheoremId::EX3_1);
    EXPECT_EQ(t.total(), rep.cases.size());
    EXPECT_GT(t.skipped, 0u);
    EXPECT_GT(t.passed, 0u);
    EXPECT_EQ(t.failed, 0u);
    for (const auto& c : rep.cases)
        if (c.status == Status::skipped) {
            EXPECT_FALSE(c.error.empty());
        }
}

TEST(Sweep, DeterministicAcrossThreadCounts)
{
    const std::vector<TheoremId> suite{TheoremId::T2_4, TheoremId::REMARK};
    const auto a = to_json(run_sweep(suite, {}, {}, {1}), false).dump();
    const auto b = to_json(run_sweep(suite, {}, {}, {3}), false).dump();
    EXPECT_EQ(a, b);
}

TEST(Sweep, WeightedDenominatorSuitePasses)
{
    const auto rep = run_sweep({TheoremId::T2_4});
    EXPECT_EQ(rep.cases.size(), 80u);
    EXPECT_TRUE(rep.ok());
    for (const auto& c : rep.cases) {
        EXPECT_LE(c.rel_err, c.tol);
        EXPECT_NEAR(c.rel_err, relative_error(c.lhs, c.rhs), 1e-300);
    }
}

TEST(Sweep, RemarkDegenerationPasses)
{
    const auto rep = run_sweep({TheoremId::REMARK});
    EXPECT_EQ(rep.summary.at(TheoremId::REMARK).passed, rep.cases.size());
    EXPECT_EQ(rep.cases.size(), 6u);
}

TEST(Sweep, ToleranceOverrideAppliesEverywhere)
{
    const auto rep = run_sweep({TheoremId::T2_4}, {}, 1e-30);
    for (const auto& c : rep.cases) EXPECT_EQ(c.tol, 1e-30);
    EXPECT_FALSE(rep.ok());
}

TEST(Sweep, DuplicateSuiteEntriesCollapse)
{
    const auto rep = run_sweep({TheoremId::REMARK, TheoremId::REMARK});
    EXPECT_EQ(rep.cases.size(), 6u);
}

TEST(SuiteParsing, Tokens)
{
    EXPECT_EQ(parse_suite("all").size(), all_theorems.size());
    EXPECT_EQ(parse_suite("2.4"), std::vector{TheoremId::T2_4});
    EXPECT_EQ(parse_suite("3.2"), std::vector{TheoremId::C3_2});
    EXPECT_EQ(parse_suite("3").size(), 5u);
    EXPECT_EQ(parse_suite("2.1,EX3_2"), (std::vector{TheoremId::T2_1, TheoremId::EX3_2}));
    EXPECT_TRUE(parse_suite("").empty());
    EXPECT_THROW((void)parse_suite("5.1"), ParameterError);
}

TEST(ReportIo, JsonFields)
{
    const auto rep = run_sweep({TheoremId::REMARK});
    const auto j = to_json(rep);
    EXPECT_EQ(j.at("format_version"), 1);
    EXPECT_TRUE(j.contains("environment"));
    EXPECT_EQ(j.at("summary").at("REMARK").at("passed"), 6);
    const auto& c = j.at("cases").at(0);
    for (const char* key : {"theorem_id", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_err", "tol", "passed",
                            "status", "runtime_ms"})
        EXPECT_TRUE(c.contains(key)) << key;
    EXPECT_EQ(c.at("theorem_id"), "REMARK");
    EXPECT_FALSE(to_json(rep, false).at("cases").at(0).contains("runtime_ms"));
}

TEST(ReportIo, CsvHasHeaderAndOneRowPerCase)
{
    const auto rep = run_sweep({TheoremId::REMARK});
    const auto csv = to_csv(rep);
    const auto lines = text::split(csv, '\n');
    std::size_t rows = 0;
    for (auto l : lines)
        if (!l.empty()) ++rows;
    EXPECT_EQ(rows, rep.cases.size() + 1);
    EXPECT_EQ(csv.rfind("theorem_id,", 0), 0u);
}

TEST(Oracle, Examples)
{
    OracleRequest f1{OracleKind::F1, {1.2, 0.5, 0.9, 2.7, 0.3, -0.4}, {}, {}, {}, 120};
    const auto v = oracle_double_sum(f1);
    EXPECT_FALSE(v.cap_warning);
    EXPECT_NEAR(v.value.real(), frozen::appell_f1, 1e-13);

    OracleRequest ml{OracleKind::ML, {}, {{1.0}, {1.0}}, {}, 1.0, 60};
    EXPECT_NEAR(oracle_double_sum(ml).value.real(), std::numbers::e, 1e-15);

    OracleRequest w{OracleKind::Wright, {}, {}, {{{0.6, 1}, {1.5, 1}, {1, 1}}, {{0.8, 0.5}, {1.7, 1.2}, {2.1, 2}}}, 0.8, 200};
    EXPECT_NEAR(oracle_double_sum(w).value.real(), frozen::wright_two_factor_point, 1e-14);
}

TEST(Oracle, CapWarningAndErrors)
{
    OracleRequest ml{OracleKind::ML, {}, {{1.0}, {1.0}}, {}, 10.0, 5};
    EXPECT_TRUE(oracle_double_sum(ml).cap_warning);
    ml.cap = 0;
    EXPECT_THROW((void)oracle_double_sum(ml), ParameterError);
    OracleRequest f1{OracleKind::F1, {1.2, 0.5}, {}, {}, {}, 50};
    EXPECT_THROW((void)oracle_double_sum(f1), ParameterError);
    EXPECT_EQ(parse_oracle_kind("2F1"), OracleKind::F21);
    EXPECT_THROW((void)parse_oracle_kind("F9"), ParameterError);
}
