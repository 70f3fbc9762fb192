#include <mlbeta/hypergeom.hpp>
#include <mlbeta/oracles.hpp>

#include <frozen_constants.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace mlbeta;

TEST(Gauss2F1, Examples)
{
    EXPECT_EQ(gauss_2f1(0.3, 1.7, 2.2, 0.0), 1.0);
    EXPECT_NEAR(gauss_2f1(1, 1, 2, 0.5), -std::log(0.5) / 0.5, 1e-14);
    EXPECT_NEAR(gauss_2f1(0.3, 1.7, 2.2, -0.6), frozen::gauss_2f1, 1e-15);
}

TEST(Gauss2F1, Preconditions)
{
    EXPECT_THROW((void)gauss_2f1(0.3, 1.7, 2.2, 1.0), DomainError);
    EXPECT_THROW((void)gauss_2f1(0.3, 1.7, -2.0, 0.5), ParameterError);
    // terminating: 2F1(-2, b; c; x) is a quadratic, valid for any x
    const double b = 1.5, c = 2.5, x = 3.0;
    EXPECT_NEAR(gauss_2f1(-2, b, c, x), 1 - 2 * b / c * x + b * (b + 1) / (c * (c + 1)) * x * x, 1e-14);
}

TEST(Kummer1F1, Examples)
{
    EXPECT_EQ(kummer_1f1(0.8, 2.5, 0.0), 1.0);
    EXPECT_NEAR(kummer_1f1(1, 2, 1), std::numbers::e - 1.0, 1e-15);
    EXPECT_NEAR(kummer_1f1(0.8, 2.5, -1.3), frozen::kummer_1f1, 1e-15);
    EXPECT_THROW((void)kummer_1f1(1, 0, 1), ParameterError);
}

TEST(AppellF1, Examples)
{
    for (double x : {-0.5, 0.2, 0.55}) {
        EXPECT_NEAR(appell_f1(1.2, 0.5, 0.9, 2.7, x, 0.0), gauss_2f1(1.2, 0.5, 2.7, x), 1e-14);
        EXPECT_NEAR(appell_f1(1.2, 0.5, 0.9, 2.7, x, x), gauss_2f1(1.2, 1.4, 2.7, x), 1e-14);
    }
    EXPECT_NEAR(appell_f1(1.2, 0.5, 0.9, 2.7, 0.3, -0.4), frozen::appell_f1, 1e-15);
    EXPECT_THROW((void)appell_f1(1.2, 0.5, 0.9, 2.7, 1.2, 0.1), DomainError);
}

TEST(AppellF3, Examples)
{
    EXPECT_NEAR(appell_f3(1.1, 0.6, 0.8, 1.4, 2.9, 0.25, 0.0), gauss_2f1(1.1, 0.8, 2.9, 0.25), 1e-15);
    EXPECT_NEAR(appell_f3(1.1, 0.6, 0.8, 1.4, 2.9, 0.0, 0.35), gauss_2f1(0.6, 1.4, 2.9, 0.35), 1e-15);
    EXPECT_NEAR(appell_f3(1.1, 0.6, 0.8, 1.4, 2.9, 0.25, 0.35), frozen::appell_f3, 1e-15);
}

TEST(LauricellaFD, Examples)
{
    EXPECT_NEAR(lauricella_fd(0.9, {0.4}, 3.1, {0.2}), gauss_2f1(0.9, 0.4, 3.1, 0.2), 1e-15);
    EXPECT_NEAR(lauricella_fd(0.9, {0.4, 0.7}, 3.1, {0.2, -0.3}), appell_f1(0.9, 0.4, 0.7, 3.1, 0.2, -0.3), 1e-15);
    EXPECT_NEAR(lauricella_fd(0.9, {0.4, 0.7, 1.1}, 3.1, {0.2, -0.3, 0.25}), frozen::lauricella_fd, 1e-15);
    EXPECT_THROW((void)lauricella_fd(0.9, {}, 3.1, {}), ParameterError);
    EXPECT_THROW((void)lauricella_fd(0.9, {0.4}, 3.1, {0.2, 0.1}), ParameterError);
    EXPECT_THROW((void)lauricella_fd(0.9, {0.4, 1.0}, 3.1, {0.2, -1.0}), DomainError);
}

TEST(LauricellaFD, DegenerationsAcrossGrid)
{
    for (double a : {0.5, 1.3})
        for (double z1 : {-0.6, 0.1, 0.6})
            for (double z2 : {-0.6, 0.4}) {
                const double g = gauss_2f1(a, 0.7, 2.4, z1);
                EXPECT_NEAR(lauricella_fd(a, {0.7}, 2.4, {z1}), g, 1e-12 * std::abs(g));
                const double f1 = appell_f1(a, 0.7, 1.6, 2.4, z1, z2);
                EXPECT_NEAR(lauricella_fd(a, {0.7, 1.6}, 2.4, {z1, z2}), f1, 1e-12 * std::abs(f1));
            }
}

TEST(HumbertPhi2, Examples)
{
    EXPECT_NEAR(humbert_phi2(0.7, 0.9, 1.9, 1.2, 0.0), kummer_1f1(0.7, 1.9, 1.2), 1e-15);
    EXPECT_EQ(humbert_phi2(0.7, 0.9, 1.9, 0.0, 0.0), 1.0);
    EXPECT_NEAR(humbert_phi2(0.7, 0.7, 1.9, 1.2, -0.8), frozen::humbert_phi2, 1e-15);
}

TEST(DoubleSeries, AntiDiagonalMatchesRowMajor)
{
    // The oracles sum the full square r, s <= cap row by row.
    const auto f1 = oracle::brute_f1(1.2, 0.5, 0.9, 2.7, 0.3, -0.4, 120);
    EXPECT_NEAR(appell_f1(1.2, 0.5, 0.9, 2.7, 0.3, -0.4), f1.value.real(), 1e-11 * std::abs(f1.value.real()));
    const auto f3 = oracle::brute_f3(1.1, 0.6, 0.8, 1.4, 2.9, 0.25, 0.35, 120);
    EXPECT_NEAR(appell_f3(1.1, 0.6, 0.8, 1.4, 2.9, 0.25, 0.35), f3.value.real(), 1e-11 * std::abs(f3.value.real()));
    const auto p2 = oracle::brute_phi2(0.7, 0.7, 1.9, 1.2, -0.8, 120);
    EXPECT_NEAR(humbert_phi2(0.7, 0.7, 1.9, 1.2, -0.8), p2.value.real(), 1e-11 * std::abs(p2.value.real()));
    const auto fd = oracle::brute_fd(0.9, {0.4, 0.7, 1.1}, 3.1, {0.2, -0.3, 0.25}, 80);
    EXPECT_NEAR(fd.value.real(), frozen::lauricella_fd, 1e-14);
}

TEST(Gegenbauer, Examples)
{
    EXPECT_EQ(gegenbauer(0, 1.7, -0.3), 1.0);
    EXPECT_DOUBLE_EQ(gegenbauer(1, 0.8, 0.5), 0.8);
    EXPECT_NEAR(gegenbauer(5, 1.3, 1.0), pochhammer(2.6, 5) / 120.0, 1e-13);
}

TEST(Gegenbauer, AtOneEqualsPochhammerRatio)
{
    for (double alpha : {0.3, 0.9, 2.2})
        for (std::size_t r = 0; r < 30; ++r) {
            const double expected = pochhammer(2 * alpha, r) / std::tgamma(static_cast<double>(r) + 1.0);
            EXPECT_NEAR(gegenbauer(r, alpha, 1.0), expected, 1e-12 * expected) << alpha << ' ' << r;
        }
}

TEST(Gegenbauer, GeneratingFunctionIdentity)
{
    for (double alpha : {0.6, 1.3})
        for (double u : {-1.0, -0.4, 0.0, 0.7, 1.0})
            for (double t : {-0.4, -0.1, 0.25, 0.4}) {
                double sum = 0.0, tr = 1.0;
                for (std::size_t r = 0; r <= 60; ++r, tr *= t) sum += gegenbauer(r, alpha, u) * tr;
                EXPECT_NEAR(sum, std::pow(1.0 - 2.0 * u * t + t * t, -alpha), 1e-10) << alpha << ' ' << u << ' ' << t;
            }
}
