#include <mlbeta/hypergeom.hpp>
#include <mlbeta/oracles.hpp>
#include <mlbeta/wright.hpp>

#include <frozen_constants.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace mlbeta;

TEST(WrightDelta, Examples)
{
    EXPECT_DOUBLE_EQ(delta({{{1, 1}}, {{1, 1}}}), 1.0);
    EXPECT_DOUBLE_EQ(delta({{{0.3, 1}, {0.9, 1}}, {{1.4, 1}}}), 0.0);
    EXPECT_NEAR(delta({{{0.6, 1}, {1.5, 1}, {1, 1}}, {{0.8, 0.5}, {1.7, 1.2}, {2.1, 2}}}), 1.7, 1e-15);
}

TEST(WrightEval, ReducesToExp)
{
    const WrightParams p{{{1, 1}}, {{1, 1}}};
    EXPECT_NEAR(wright_eval(p, 0.7).real(), 2.0137527074704766, 1e-15);
    for (double re = -5.0; re <= 5.0; re += 0.5)
        for (double im : {-2.0, 0.0, 3.0}) {
            if (std::abs(complex(re, im)) > 5.0) continue;
            const complex x(re, im);
            EXPECT_LE(std::abs(wright_eval(p, x) - std::exp(x)), 1e-12 * std::abs(std::exp(x))) << x;
        }
}

TEST(WrightEval, ZeroArgumentKeepsFirstTerm)
{
    const WrightParams p{{{2, 1}, {1, 1}}, {{3, 1}}};
    EXPECT_DOUBLE_EQ(wright_eval(p, 0.0).real(), 0.5);
}

TEST(WrightEval, FrozenThreePsiThree)
{
    const WrightParams p{{{1.3, 1}, {0.7, 1}, {1, 1}}, {{0.8, 0.5}, {1.7, 1.2}, {2.0, 2}}};
    const complex v = wright_eval(p, {1.5, 0.5});
    EXPECT_NEAR(v.real(), frozen::wright_3psi3_re, 1e-13);
    EXPECT_NEAR(v.imag(), frozen::wright_3psi3_im, 1e-13);

    const WrightParams q{{{0.6, 1}, {1.5, 1}, {1, 1}}, {{0.8, 0.5}, {1.7, 1.2}, {2.1, 2}}};
    EXPECT_NEAR(wright_eval(q, 0.8).real(), frozen::wright_two_factor_point, 1e-14);
}

TEST(WrightEval, ReducesToGauss)
{
    for (double x : {-0.5, -0.2, 0.1, 0.45}) {
        const double a = 0.7, b = 1.9, c = 2.6;
        const WrightParams p{{{a, 1}, {b, 1}}, {{c, 1}}};
        const double lhs = wright_eval(p, x).real() * std::tgamma(c) / (std::tgamma(a) * std::tgamma(b));
        EXPECT_NEAR(lhs, gauss_2f1(a, b, c, x), 1e-10 * std::abs(lhs)) << x;
    }
}

TEST(WrightEval, RecursiveMatchesDirectTerms)
{
    const WrightParams cases[] = {
        {{{0.6, 1}, {1.5, 1}, {1, 1}}, {{0.8, 0.5}, {1.7, 1.2}, {2.1, 2}}},
        {{{1.3, 1}, {0.7, 1}, {1, 1}}, {{0.8, 0.5}, {1.7, 1.2}, {2.0, 2}}},
        {{{0.25, 2}, {3.5, 0.7}}, {{-1.3, 1}, {0.4, 3}}},
    };
    for (const auto& p : cases) {
        const complex x{1.0, 1.0};
        const auto terms = wright_terms(p, x, 50);
        for (std::size_t k = 0; k < 50; ++k) {
            const complex direct = wright_term_direct(p, x, k);
            EXPECT_LE(std::abs(terms[k] - direct), 1e-12 * std::abs(direct)) << k;
        }
    }
}

TEST(WrightEval, TermRatioMatchesGammaRatios)
{
    const WrightParams p{{{0.6, 1}, {1.5, 1.3}}, {{0.8, 0.5}, {1.7, 1.2}, {2.1, 2}}};
    const complex x{0.4, -0.3};
    for (std::size_t k = 0; k < 50; ++k) {
        const double kk = static_cast<double>(k);
        double lr = 0.0;
        for (const auto& u : p.upper) lr += std::lgamma(u.value + u.weight * (kk + 1)) - std::lgamma(u.value + u.weight * kk);
        for (const auto& l : p.lower) lr -= std::lgamma(l.value + l.weight * (kk + 1)) - std::lgamma(l.value + l.weight * kk);
        const complex expected = std::exp(lr) * x / (kk + 1.0);
        const complex ratio = wright_term_direct(p, x, k + 1) / wright_term_direct(p, x, k);
        EXPECT_LE(std::abs(ratio - expected), 1e-12 * std::abs(expected)) << k;
    }
}

TEST(WrightEval, NegativeDeltaRejected)
{
    const WrightParams p{{{1, 1}, {1, 1}, {1, 1}}, {{1, 0.5}}};
    EXPECT_LT(delta(p), 0.0);
    EXPECT_THROW((void)wright_eval(p, 0.1), ParameterError);
}

TEST(WrightEval, BalancedRadius)
{
    // 2Psi1[(a,1),(b,1);(c,1)] is balanced with radius 1.
    const WrightParams p{{{0.5, 1}, {0.5, 1}}, {{1.5, 1}}};
    EXPECT_DOUBLE_EQ(balanced_radius(p), 1.0);
    EXPECT_THROW((void)wright_eval(p, 1.0), ConvergenceError);
    EXPECT_THROW((void)wright_eval(p, {0.0, -1.2}), ConvergenceError);
    EXPECT_NO_THROW((void)wright_eval(p, 0.5));

    const WrightParams q{{{1, 2}}, {{1, 1}}};
    EXPECT_DOUBLE_EQ(balanced_radius(q), 0.25);
}

TEST(WrightEval, LowerPoleDropsTerms)
{
    // 1/Γ(-1 + k) vanishes for k = 0, 1: the sum starts at k = 2.
    const WrightParams p{{{1, 1}}, {{-1, 1}}};
    const double x = 0.6;
    // sum_{k>=2} x^k / Γ(k-1) = x^2 e^x
    EXPECT_NEAR(wright_eval(p, x).real(), x * x * std::exp(x), 1e-14);
}

TEST(WrightEval, UpperPoleThrows)
{
    const WrightParams p{{{-2, 1}}, {{1, 1}}};
    EXPECT_THROW((void)wright_eval(p, 0.5), PoleError);
}

TEST(WrightEval, InvalidWeights)
{
    EXPECT_THROW((void)wright_eval({{{1, -1}}, {{1, 1}}}, 0.5), ParameterError);
    EXPECT_THROW((void)wright_eval({{{NAN, 1}}, {{1, 1}}}, 0.5), ParameterError);
}

TEST(WrightEval, MonotoneTruncation)
{
    const WrightParams p{{{1.3, 1}, {0.7, 1}, {1, 1}}, {{0.8, 0.5}, {1.7, 1.2}, {2.0, 2}}};
    SeriesControl ctrl;
    const complex base = wright_eval(p, {1.5, 0.5}, ctrl);
    for (std::size_t m : {1000u, 5000u, 50000u}) {
        ctrl.max_terms = m;
        EXPECT_LE(std::abs(wright_eval(p, {1.5, 0.5}, ctrl) - base), ctrl.rel_tol * std::abs(base));
    }
}

TEST(WrightEval, NonConvergenceReported)
{
    SeriesControl ctrl;
    ctrl.max_terms = 5;
    const WrightParams p{{{1, 1}}, {{1, 1}}};
    EXPECT_FALSE(wright_sum(p, 3.0, ctrl).converged);
    EXPECT_THROW((void)wright_eval(p, 3.0, ctrl), ConvergenceError);
}

TEST(WrightEval, AgreesWithBruteForceOracle)
{
    const WrightParams p{{{0.6, 1}, {1.5, 1}, {1, 1}}, {{0.8, 0.5}, {1.7, 1.2}, {2.1, 2}}};
    const auto o = oracle::brute_wright(p, 0.8, 200);
    EXPECT_FALSE(o.cap_warning);
    EXPECT_NEAR(o.value.real(), frozen::wright_two_factor_point, 1e-14);
}
