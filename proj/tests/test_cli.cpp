#include <mlbeta/text.hpp>

#include <cli_runner.hpp>
#include <frozen_constants.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace {

using Run = testing_support::CliRun;

Run cli(const std::string& args, bool merge = false) { return testing_support::run_cli(args, merge); }

double value_of(const Run& r)
{
    std::string line = r.out.substr(0, r.out.find('\n'));
    return mlbeta::text::parse_complex(line).real();
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("mlbeta_cli_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST(Cli, EvalMlPrintsShortestRoundTrip)
{
    const auto r = cli("eval ml --eps 1 --omega 1 --z 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2.718281828459045\n");
}

TEST(Cli, EvalMlJson)
{
    const auto r = cli("eval ml --eps 0.5,1.2 --omega 0.8,1.7 --z 2.5 --format json");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"value_re\":3.9022384953075"), std::string::npos) << r.out;
}

TEST(Cli, EvalWright)
{
    const auto r = cli("eval wright --upper 0.6:1,1.5:1,1:1 --lower 0.8:0.5,1.7:1.2,2.1:2 --x 0.8");
    EXPECT_EQ(r.code, 0);
    EXPECT_NEAR(value_of(r), frozen::wright_two_factor_point, 1e-14);
}

TEST(Cli, NegativeValuesParse)
{
    const auto r = cli("eval ml --eps 1 --omega 1 --z -0.4");
    EXPECT_EQ(r.code, 0);
    EXPECT_NEAR(value_of(r), std::exp(-0.4), 1e-15);
}

TEST(Cli, OperatorPathsAgree)
{
    const auto s = cli("eval op --theorem 2.1 --path series");
    const auto q = cli("eval op --theorem 2.1 --path quad");
    ASSERT_EQ(s.code, 0);
    ASSERT_EQ(q.code, 0);
    EXPECT_NEAR(value_of(s), frozen::two_factor, 1e-12);
    EXPECT_NEAR(value_of(q), frozen::two_factor, 1e-12);
}

TEST(Cli, OperatorDomainErrorExitsTwo)
{
    const auto r = cli("eval op --theorem 2.1 --path quad --z1 1.5", true);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("|z| < 1"), std::string::npos) << r.out;
}

TEST(Cli, VerifySuitePasses)
{
    const auto r = cli("verify --suite 2.4 --tol 1e-8");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("T2_4: 80 passed, 0 failed"), std::string::npos) << r.out;
}

TEST(Cli, VerifyFailureExitsOne)
{
    EXPECT_EQ(cli("verify --suite 2.4 --tol 1e-30").code, 1);
}

TEST(Cli, VerifyWritesJsonReport)
{
    const auto path = temp_file("report.json");
    const auto r = cli("verify --suite remark --format json --out \"" + path.string() + "\"");
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("\"format_version\": 1"), std::string::npos);
    EXPECT_NE(ss.str().find("\"REMARK\""), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, VerifyCsvToStdout)
{
    const auto r = cli("verify --suite remark --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("theorem_id,", 0), 0u) << r.out;
}

TEST(Cli, ConfigFileWithExplicitOverride)
{
    const auto path = temp_file("op.cfg");
    {
        std::ofstream cfg(path);
        cfg << "# operator point\ntheorem = 2.1\npath=series\nz1 = 0.9\n";
    }
    const auto from_cfg = cli("eval op --config \"" + path.string() + "\"");
    const auto overridden = cli("eval op --config \"" + path.string() + "\" --z1 0.3");
    std::filesystem::remove(path);
    ASSERT_EQ(from_cfg.code, 0);
    ASSERT_EQ(overridden.code, 0);
    EXPECT_NEAR(value_of(overridden), frozen::two_factor, 1e-12);
    EXPECT_GT(std::abs(value_of(from_cfg) - frozen::two_factor), 1e-3);
}

TEST(Cli, BadArgumentsExitTwo)
{
    EXPECT_EQ(cli("eval ml --eps 1,2 --omega 1 --z 1").code, 2);
    EXPECT_EQ(cli("eval ml --eps abc --omega 1 --z 1").code, 2);
    EXPECT_EQ(cli("eval op --theorem 9.9").code, 2);
    EXPECT_EQ(cli("verify --suite nope").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("eval op --config /nonexistent/file.cfg").code, 2);
}

TEST(Cli, HelpExitsZero)
{
    const auto r = cli("--help");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, OracleRegeneratesConstant)
{
    const auto r = cli("oracle --kind F1 --params 1.2,0.5,0.9,2.7,0.3,-0.4 --cap 120");
    EXPECT_EQ(r.code, 0);
    EXPECT_NEAR(value_of(r), frozen::appell_f1, 1e-13);
}

TEST(Cli, OracleCapWarning)
{
    const auto r = cli("oracle --kind ML --eps 1 --omega 1 --z 10 --cap 5", true);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("warning"), std::string::npos);
}

TEST(Cli, EvalHyp)
{
    const auto r = cli("eval hyp --fn 2F1 --params 1,1,2,0.5");
    EXPECT_EQ(r.code, 0);
    EXPECT_NEAR(value_of(r), 2.0 * std::log(2.0), 1e-14);
}
