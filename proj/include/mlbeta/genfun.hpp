#pragma once

///
/// \file genfun.hpp
///
/// Beta-type integrals against a two-variable generating function
/// G(u, t) = sum_r a_r g_r(u) t^r:
///
///   ∫_0^1 y^{m-1} (1-y)^{n-m-1} prod_i (1 - z_i y)^{-beta_i}
///         G(u, t y^mu (1-y)^nu) E_{(eps_i),(omega_i)}(q y (1-y)) dy
///
/// evaluated by quadrature with the closed form of G, and by the series
///
///   sum_r a_r g_r(u) t^r sum_{r_1..r_k} prod (beta_i)_{r_i} z_i^{r_i} / r_i!
///       3Psi_{l+1}[(m+mu r+R,1),(n-m+nu r,1),(1,1); (omega_i,eps_i),(n+mu r+nu r+R,2); q]
///
/// with R = r_1 + ... + r_k. Unlike the operator in beta_operator.hpp these
/// integrals carry no 1/B normalization.
///

#include <mlbeta/beta_operator.hpp>
#include <mlbeta/hypergeom.hpp>
#include <mlbeta/mittag_leffler.hpp>
#include <mlbeta/multi_series.hpp>
#include <mlbeta/numeric_kernel.hpp>
#include <mlbeta/quadrature.hpp>

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace mlbeta {

/// A generating function G(u, t) = sum_r term(r, u) t^r.
struct GeneratingFunction {
    std::string name;
    /// a_r g_r(u)
    std::function<double(std::size_t, double)> term;
    /// G(u, t) in closed form
    std::function<double(double, double)> closed_form;
    /// (u, t) inside the region where the series converges to closed_form
    std::function<bool(double, double)> validity;
};

/// (1 - u t)^{-c} = sum (c)_r (u t)^r / r!, |u t| < 1.
inline GeneratingFunction hypergeom_gf(double c)
{
    return {"hypergeom(c=" + std::to_string(c) + ")",
            [c](std::size_t r, double u) {
                double a = 1.0;
                for (std::size_t i = 0; i < r; ++i) a *= (c + static_cast<double>(i)) * u / (static_cast<double>(i) + 1.0);
                return a;
            },
            [c](double u, double t) { return std::pow(1.0 - u * t, -c); },
            [](double u, double t) { return std::abs(u * t) < 1.0; }};
}

/// Φ2[c, c; d; u, t] = sum (c)_r / ((d)_r r!) 1F1(c; d+r; u) t^r, entire.
inline GeneratingFunction humbert_gf(double c, double d)
{
    return {"humbert(c=" + std::to_string(c) + ",d=" + std::to_string(d) + ")",
            [c, d](std::size_t r, double u) {
                double a = 1.0;
                for (std::size_t i = 0; i < r; ++i) {
                    const double ii = static_cast<double>(i);
                    a *= (c + ii) / ((d + ii) * (ii + 1.0));
                }
                return a * kummer_1f1(c, d + static_cast<double>(r), u);
            },
            [c, d](double u, double t) { return humbert_phi2(c, c, d, u, t); },
            [](double u, double t) { return std::isfinite(u) && std::isfinite(t); }};
}

/// (1 - 2ut + t^2)^{-alpha} = sum C_r^{(alpha)}(u) t^r.
///
/// Converges for |t| below the modulus of the nearer root of 1 - 2ut + t^2:
/// 1 when |u| <= 1, and |u| - sqrt(u^2 - 1) otherwise.
inline GeneratingFunction gegenbauer_gf(double alpha)
{
    return {"gegenbauer(alpha=" + std::to_string(alpha) + ")",
            [alpha](std::size_t r, double u) { return gegenbauer(r, alpha, u); },
            [alpha](double u, double t) { return std::pow(1.0 - 2.0 * u * t + t * t, -alpha); },
            [](double u, double t) {
                const double radius = std::abs(u) <= 1.0 ? 1.0 : std::abs(u) - std::sqrt(u * u - 1.0);
                return std::abs(t) < radius;
            }};
}

/// A factor (1 - z y)^{-beta} of the multi-factor integrals.
struct ExtraFactor {
    double beta = 0.0;
    double z = 0.0;
};

struct GenIntegralSpec {
    double m = 1.0;
    double n = 2.0;
    double mu = 1.0;
    double nu = 1.0;
    double t = 0.0;
    /// Frozen first argument of G.
    double u = 1.0;
    complex q{};
    MLParams ml;
    GeneratingFunction gf;
    std::vector<ExtraFactor> extra;

    /// sup over y in (0,1) of y^mu (1-y)^nu.
    [[nodiscard]] double weight_peak() const
    {
        auto xlogx = [](double a) { return a > 0.0 ? a * std::log(a) : 0.0; };
        return std::exp(xlogx(mu) + xlogx(nu) - xlogx(mu + nu));
    }

    void validate() const
    {
        if (!(m > 0.0) || !(n > m)) throw ParameterError("gen integral: requires n > m > 0");
        if (!(mu >= 0.0) || !(nu >= 0.0) || !(mu + nu > 0.0))
            throw ParameterError("gen integral: requires mu, nu >= 0 and mu + nu > 0");
        if (!gf.term || !gf.closed_form || !gf.validity)
            throw ParameterError("gen integral: generating function is incomplete");
        ml.validate();
        for (const auto& f : extra)
            if (!(std::abs(f.z) < 1.0)) throw DomainError("gen integral: extra factors need |z_i| < 1");
        if (!gf.validity(u, t * weight_peak()))
            throw DomainError("gen integral: G(u, t y^mu (1-y)^nu) leaves the convergence region of " + gf.name);
    }
};

/// Left-hand side by tanh-sinh quadrature using the closed form of G.
inline complex gen_quad(const GenIntegralSpec& spec, const QuadControl& qctrl = {}, const SeriesControl& ctrl = {})
{
    spec.validate();
    auto integrand = [&](double y, double yc) -> complex {
        double g = spec.gf.closed_form(spec.u, spec.t * std::pow(y, spec.mu) * std::pow(yc, spec.nu));
        for (const auto& f : spec.extra) g *= std::pow(1.0 - f.z * y, -f.beta);
        return g * ml_multi(spec.ml, spec.q * (y * yc), ctrl);
    };
    return integrate_beta_weighted(spec.m, spec.n - spec.m, integrand, qctrl);
}

/// Right-hand side as a series over r (and over the total degree of the
/// extra-factor indices when present).
inline complex gen_series(const GenIntegralSpec& spec, const SeriesControl& ctrl = {})
{
    spec.validate();
    const SeriesControl inner = ctrl.tightened(100.0);
    const double m = spec.m, n = spec.n, mu = spec.mu, nu = spec.nu;

    std::vector<double> blocks;
    DegreeBlocks gen;
    if (!spec.extra.empty()) {
        std::vector<DegreeBlocks::Ratio> ratios;
        for (const auto& f : spec.extra) ratios.push_back(DegreeBlocks::binomial(f.beta, f.z));
        gen = DegreeBlocks(std::move(ratios));
    }
    auto block = [&](std::size_t d) {
        while (blocks.size() <= d) blocks.push_back(gen.next());
        return blocks[d];
    };

    auto term = [&](std::size_t r) -> complex {
        const double rr = static_cast<double>(r);
        const double coef = spec.gf.term(r, spec.u) * std::pow(spec.t, rr);
        if (coef == 0.0) return {0.0, 0.0};
        if (spec.extra.empty())
            return coef * detail::psi3(spec.ml, m + mu * rr, n - m + nu * rr, n + mu * rr + nu * rr, spec.q, inner);
        auto inner_term = [&](std::size_t d) -> complex {
            const double e = block(d);
            if (e == 0.0) return {0.0, 0.0};
            const double dd = static_cast<double>(d);
            return e * detail::psi3(spec.ml, m + mu * rr + dd, n - m + nu * rr, n + mu * rr + nu * rr + dd, spec.q, inner);
        };
        return coef * detail::finish_outer(compensated_sum<complex>(inner_term, inner), "gen_series (extra factors)");
    };
    return detail::finish_outer(compensated_sum<complex>(term, ctrl), "gen_series");
}

/// The n = 2m, mu = nu special case written with its own parameterization:
/// upper (m+nu r, 1) twice and lower (2m + 2 nu r, 2).
inline complex corollary_series(double m, double nu, double t, double u, complex q, const MLParams& ml,
                                const GeneratingFunction& gf, const SeriesControl& ctrl = {})
{
    GenIntegralSpec check{m, 2.0 * m, nu, nu, t, u, q, ml, gf, {}};
    check.validate();
    const SeriesControl inner = ctrl.tightened(100.0);
    auto term = [&](std::size_t r) -> complex {
        const double rr = static_cast<double>(r);
        const double coef = gf.term(r, u) * std::pow(t, rr);
        if (coef == 0.0) return {0.0, 0.0};
        return coef * detail::psi3(ml, m + nu * rr, m + nu * rr, 2.0 * m + 2.0 * nu * rr, q, inner);
    };
    return detail::finish_outer(compensated_sum<complex>(term, ctrl), "corollary_series");
}

/// A built-in generating-function example with its default grid.
struct ExampleInstance {
    std::string id;
    GeneratingFunction gf;
    double u = 1.0;
    double m = 0.8;
    double n = 2.5;
    std::vector<std::pair<double, double>> mu_nu;
    std::vector<double> t_values;

    [[nodiscard]] GenIntegralSpec spec(double mu, double nu, double t, complex q, MLParams ml) const
    {
        return {m, n, mu, nu, t, u, q, std::move(ml), gf, {}};
    }
};

/// The three worked examples: hypergeometric GF at u = 1, Humbert GF at
/// u = 0.7 and Gegenbauer GF at u = 1.
inline std::vector<ExampleInstance> example_instances()
{
    const std::vector<std::pair<double, double>> mu_nu{{1.0, 0.5}, {2.0, 0.0}};
    const std::vector<double> ts{0.3};
    return {
        {"EX3_1", hypergeom_gf(1.4), 1.0, 0.8, 2.5, mu_nu, ts},
        {"EX3_2", humbert_gf(1.4, 2.2), 0.7, 0.8, 2.5, mu_nu, ts},
        {"EX3_3", gegenbauer_gf(0.9), 1.0, 0.8, 2.5, mu_nu, ts},
    };
}

} // namespace mlbeta
