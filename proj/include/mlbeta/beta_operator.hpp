#pragma once

///
/// \file beta_operator.hpp
///
/// Beta-type integral operator
///
///   J[h1, h2; q] = 1/B(eta1, eta2) ∫_{a1}^{a2} (u-a1)^{eta1-1} (a2-u)^{eta2-1}
///                    h1(u)^{eta3} E_{(eps_i),(omega_i)}(q h2(u)) du
///
/// for five closed kernel families, evaluated two independent ways: by
/// tanh-sinh quadrature of the integral, and by the series / closed-form
/// right-hand sides in terms of 3Psi_{l+1} Wright functions.
///

#include <mlbeta/mittag_leffler.hpp>
#include <mlbeta/multi_series.hpp>
#include <mlbeta/numeric_kernel.hpp>
#include <mlbeta/quadrature.hpp>
#include <mlbeta/wright.hpp>

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace mlbeta {

//==============================================================================
// Kernels
//==============================================================================

/// h1 = (1 - z1 u)^{-beta1} (1 - z2 u)^{-beta2}, h2 = u(1-u) on [0, 1].
struct TwoFactor {
    double beta1 = 0.0, beta2 = 0.0, z1 = 0.0, z2 = 0.0;
};

/// h1 = (1 - z1 u)^{-beta1} (1 - z2 (1-u))^{-beta2}, h2 = u(1-u) on [0, 1].
struct CrossFactor {
    double beta1 = 0.0, beta2 = 0.0, z1 = 0.0, z2 = 0.0;
};

/// h1 = x u + y, h2 = (u - a1)(a2 - u).
struct AffinePower {
    double x = 0.0, y = 1.0;
};

/// h1 = (a2-a1) + xi (u-a1) + sigma (a2-u), h2 = (u-a1)(a2-u) / h1^2,
/// with eta3 = -(eta1 + eta2).
struct WeightedDenominator {
    double xi = 0.0, sigma = 0.0;
};

/// h1 = prod_i (1 - z_i u)^{-beta_i}, h2 = u(1-u) on [0, 1].
struct MultiFactor {
    std::vector<double> betas;
    std::vector<double> zs;
};

using KernelSpec = std::variant<TwoFactor, CrossFactor, AffinePower, WeightedDenominator, MultiFactor>;

inline const char* kernel_name(const KernelSpec& k)
{
    switch (k.index()) {
    case 0: return "two_factor";
    case 1: return "cross_factor";
    case 2: return "affine_power";
    case 3: return "weighted_denominator";
    default: return "multi_factor";
    }
}

struct OperatorSpec {
    double a1 = 0.0;
    double a2 = 1.0;
    double eta1 = 1.0;
    double eta2 = 1.0;
    double eta3 = 1.0;
    complex q{};
    MLParams ml;
    KernelSpec kernel;

    [[nodiscard]] double length() const { return a2 - a1; }

    void validate() const;
};

namespace detail {

inline bool is_integer(double x) { return x == std::round(x); }

inline void require_z(double z, const char* who)
{
    if (!(std::abs(z) < 1.0))
        throw DomainError(std::string(who) + ": kernel requires |z| < 1, got z = " + std::to_string(z));
}

inline void require_unit_interval(const OperatorSpec& s, const char* who)
{
    if (s.a1 != 0.0 || s.a2 != 1.0 || s.eta3 != 1.0)
        throw ParameterError(std::string(who) + ": kernel requires a1 = 0, a2 = 1 and eta3 = 1");
}

} // namespace detail

inline void OperatorSpec::validate() const
{
    if (!(a1 < a2)) throw ParameterError("operator: requires a1 < a2");
    if (!(eta1 > 0.0) || !(eta2 > 0.0)) throw ParameterError("operator: requires eta1 > 0 and eta2 > 0");
    if (!std::isfinite(eta3) || !std::isfinite(q.real()) || !std::isfinite(q.imag()))
        throw ParameterError("operator: non-finite eta3 or q");
    ml.validate();
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, TwoFactor> || std::is_same_v<K, CrossFactor>) {
                detail::require_unit_interval(*this, kernel_name(kernel));
                detail::require_z(k.z1, kernel_name(kernel));
                detail::require_z(k.z2, kernel_name(kernel));
            } else if constexpr (std::is_same_v<K, MultiFactor>) {
                detail::require_unit_interval(*this, "multi_factor");
                if (k.betas.size() != k.zs.size() || k.betas.empty())
                    throw ParameterError("multi_factor: betas and zs must be nonempty and of equal length");
                for (double z : k.zs) detail::require_z(z, "multi_factor");
            } else if constexpr (std::is_same_v<K, AffinePower>) {
                const double lo = k.x * a1 + k.y;
                const double hi = k.x * a2 + k.y;
                if (lo == 0.0) throw DomainError("affine_power: requires a1 x + y != 0");
                if (!(hi / lo > 0.0))
                    throw DomainError("affine_power: requires (a2 x + y)/(a1 x + y) > 0");
                if (lo < 0.0 && !detail::is_integer(eta3))
                    throw DomainError("affine_power: h1 < 0 on the interval with non-integer eta3");
            } else {
                if (!(k.xi > -1.0) || !(k.sigma > -1.0))
                    throw DomainError("weighted_denominator: requires xi > -1 and sigma > -1");
                if (std::abs(eta3 + eta1 + eta2) > 1e-12 * (1.0 + std::abs(eta3)))
                    throw ParameterError("weighted_denominator: requires eta3 = -(eta1 + eta2)");
            }
        },
        kernel);
}

//==============================================================================
// Spec builders
//==============================================================================

inline OperatorSpec two_factor_spec(double eta1, double eta2, TwoFactor k, complex q, MLParams ml)
{
    return {0.0, 1.0, eta1, eta2, 1.0, q, std::move(ml), k};
}

inline OperatorSpec cross_factor_spec(double eta1, double eta2, CrossFactor k, complex q, MLParams ml)
{
    return {0.0, 1.0, eta1, eta2, 1.0, q, std::move(ml), k};
}

inline OperatorSpec affine_power_spec(double a1, double a2, double eta1, double eta2, double eta3, AffinePower k,
                                      complex q, MLParams ml)
{
    return {a1, a2, eta1, eta2, eta3, q, std::move(ml), k};
}

inline OperatorSpec weighted_denominator_spec(double a1, double a2, double eta1, double eta2, WeightedDenominator k,
                                              complex q, MLParams ml)
{
    return {a1, a2, eta1, eta2, -(eta1 + eta2), q, std::move(ml), k};
}

inline OperatorSpec multi_factor_spec(double eta1, double eta2, MultiFactor k, complex q, MLParams ml)
{
    return {0.0, 1.0, eta1, eta2, 1.0, q, std::move(ml), std::move(k)};
}

//==============================================================================
// Quadrature path
//==============================================================================

/// The operator by direct quadrature of its defining integral.
///
/// Maps u = a1 + (a2-a1) v; the beta weight becomes the endpoint weight of
/// tanh_sinh_beta and (a2-a1)^{eta1+eta2-1} comes out in front.
inline complex quad_operator(const OperatorSpec& spec, const QuadControl& qctrl = {}, const SeriesControl& ctrl = {})
{
    spec.validate();
    const double len = spec.length();
    const bool integral_power = detail::is_integer(spec.eta3);

    auto power = [&](double h1) {
        if (!integral_power && !(h1 > 0.0))
            throw DomainError(std::string(kernel_name(spec.kernel)) + ": h1 <= 0 under a non-integer power");
        return std::pow(h1, spec.eta3);
    };

    auto integrand = [&](double v, double vc) -> complex {
        double h1 = 1.0;
        double h2 = 0.0;
        std::visit(
            [&](const auto& k) {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, TwoFactor>) {
                    h1 = std::pow(1.0 - k.z1 * v, -k.beta1) * std::pow(1.0 - k.z2 * v, -k.beta2);
                    h2 = v * vc;
                } else if constexpr (std::is_same_v<K, CrossFactor>) {
                    h1 = std::pow(1.0 - k.z1 * v, -k.beta1) * std::pow(1.0 - k.z2 * vc, -k.beta2);
                    h2 = v * vc;
                } else if constexpr (std::is_same_v<K, MultiFactor>) {
                    for (std::size_t i = 0; i < k.zs.size(); ++i) h1 *= std::pow(1.0 - k.zs[i] * v, -k.betas[i]);
                    h2 = v * vc;
                } else if constexpr (std::is_same_v<K, AffinePower>) {
                    h1 = k.x * (spec.a1 + len * v) + k.y;
                    h2 = len * len * v * vc;
                } else {
                    const double g = 1.0 + k.xi * v + k.sigma * vc;
                    h1 = len * g;
                    h2 = v * vc / (g * g);
                }
            },
            spec.kernel);
        return power(h1) * ml_multi(spec.ml, spec.q * h2, ctrl);
    };

    const complex integral = integrate_beta_weighted(spec.eta1, spec.eta2, integrand, qctrl);
    return std::pow(len, spec.eta1 + spec.eta2 - 1.0) / beta_fn(spec.eta1, spec.eta2) * integral;
}

//==============================================================================
// Series paths
//==============================================================================

namespace detail {

/// 3Psi_{l+1}[(p1,1),(p2,1),(1,1); (omega_i,eps_i), (p3,2); x].
inline complex psi3(const MLParams& ml, double p1, double p2, double p3, complex x, const SeriesControl& ctrl)
{
    WrightParams w;
    w.upper = {{p1, 1.0}, {p2, 1.0}, {1.0, 1.0}};
    w.lower.reserve(ml.size() + 1);
    for (std::size_t i = 0; i < ml.size(); ++i) w.lower.push_back({ml.omega[i], ml.eps[i]});
    w.lower.push_back({p3, 2.0});
    return wright_eval(w, x, ctrl);
}

template <class Spec>
const Spec& expect_kernel(const OperatorSpec& s, const char* who)
{
    const auto* k = std::get_if<Spec>(&s.kernel);
    if (!k) throw ParameterError(std::string(who) + ": wrong kernel " + kernel_name(s.kernel));
    return *k;
}

inline complex finish_outer(const SeriesResult<complex>& r, const char* who)
{
    if (!r.converged)
        throw ConvergenceError(std::string(who) + ": outer series not converged after " + std::to_string(r.terms_used) +
                               " terms");
    return r.value;
}

// (beta)_r z^r / r! for r = 0..n-1, extended on demand.
struct BinomialCoefficients {
    double beta, z;
    std::vector<double> c{1.0};

    double operator[](std::size_t r)
    {
        while (c.size() <= r) {
            const double rr = static_cast<double>(c.size() - 1);
            c.push_back(c.back() * (beta + rr) * z / (rr + 1.0));
        }
        return c[r];
    }
};

} // namespace detail

/// Double series over (r, s) summed along anti-diagonals r + s = d; the
/// Wright factor depends on d only.
inline complex thm21_series(const OperatorSpec& spec, const SeriesControl& ctrl = {})
{
    spec.validate();
    const auto& k = detail::expect_kernel<TwoFactor>(spec, "thm21_series");
    const SeriesControl inner = ctrl.tightened(100.0);
    detail::BinomialCoefficients p{k.beta1, k.z1}, q{k.beta2, k.z2};
    auto term = [&](std::size_t d) -> complex {
        double coef = 0.0;
        for (std::size_t r = 0; r <= d; ++r) coef += p[r] * q[d - r];
        if (coef == 0.0) return {0.0, 0.0};
        const double dd = static_cast<double>(d);
        return coef * detail::psi3(spec.ml, spec.eta1 + dd, spec.eta2, spec.eta1 + spec.eta2 + dd, spec.q, inner);
    };
    const auto r = compensated_sum<complex>(term, ctrl);
    return detail::finish_outer(r, "thm21_series") / beta_fn(spec.eta1, spec.eta2);
}

/// Double series over (r, s) with Wright upper parameters eta1 + r and
/// eta2 + s, summed along anti-diagonals.
inline complex thm22_series(const OperatorSpec& spec, const SeriesControl& ctrl = {})
{
    spec.validate();
    const auto& k = detail::expect_kernel<CrossFactor>(spec, "thm22_series");
    const SeriesControl inner = ctrl.tightened(100.0);
    detail::BinomialCoefficients p{k.beta1, k.z1}, q{k.beta2, k.z2};
    auto term = [&](std::size_t d) -> complex {
        complex block{};
        const double dd = static_cast<double>(d);
        for (std::size_t r = 0; r <= d; ++r) {
            const double coef = p[r] * q[d - r];
            if (coef == 0.0) continue;
            block += coef * detail::psi3(spec.ml, spec.eta1 + static_cast<double>(r),
                                         spec.eta2 + static_cast<double>(d - r), spec.eta1 + spec.eta2 + dd, spec.q,
                                         inner);
        }
        return block;
    };
    const auto r = compensated_sum<complex>(term, ctrl);
    return detail::finish_outer(r, "thm22_series") / beta_fn(spec.eta1, spec.eta2);
}

/// Single series over r for h1 = x u + y.
///
/// With L = a2 - a1 and w = -L x / (a1 x + y):
///
///   J = (a1 x + y)^{eta3} L^{eta1+eta2-1} / B(eta1, eta2)
///       * sum_r (-eta3)_r / r! w^r 3Psi_{l+1}[(eta1+r,1),(eta2,1),(1,1);
///                                             (omega_i,eps_i),(eta1+eta2+r,2); q L^2]
///
/// The outer sum terminates when eta3 is a nonnegative integer and otherwise
/// needs |w| < 1.
inline complex thm23_series(const OperatorSpec& spec, const SeriesControl& ctrl = {})
{
    spec.validate();
    const auto& k = detail::expect_kernel<AffinePower>(spec, "thm23_series");
    const double len = spec.length();
    const double base = spec.a1 * k.x + k.y;
    const double w = -len * k.x / base;
    const bool terminating = spec.eta3 >= 0.0 && detail::is_integer(spec.eta3);
    if (!terminating && !(std::abs(w) < 1.0))
        throw ConvergenceError("thm23_series: outer series needs |(a2-a1) x / (a1 x + y)| < 1");

    const SeriesControl inner = ctrl.tightened(100.0);
    const complex x = spec.q * (len * len);
    double coef = 1.0;
    auto term = [&](std::size_t r) -> complex {
        const double rr = static_cast<double>(r);
        if (r > 0) coef *= (-spec.eta3 + rr - 1.0) / rr * w;
        if (coef == 0.0) return {0.0, 0.0};
        return coef * detail::psi3(spec.ml, spec.eta1 + rr, spec.eta2, spec.eta1 + spec.eta2 + rr, x, inner);
    };
    const auto r = compensated_sum<complex>(term, ctrl);
    const double scale = std::pow(base, spec.eta3) * std::pow(len, spec.eta1 + spec.eta2 - 1.0) / beta_fn(spec.eta1, spec.eta2);
    return scale * detail::finish_outer(r, "thm23_series");
}

/// Closed form for the weighted-denominator kernel: one Wright evaluation
/// at q / ((xi+1)(sigma+1)) times (xi+1)^{-eta1} (sigma+1)^{-eta2} / (B (a2-a1)).
inline complex thm24_closed(const OperatorSpec& spec, const SeriesControl& ctrl = {})
{
    spec.validate();
    const auto& k = detail::expect_kernel<WeightedDenominator>(spec, "thm24_closed");
    const double pre = std::pow(k.xi + 1.0, -spec.eta1) * std::pow(k.sigma + 1.0, -spec.eta2) /
                       (beta_fn(spec.eta1, spec.eta2) * spec.length());
    const complex x = spec.q / ((k.xi + 1.0) * (k.sigma + 1.0));
    return pre * detail::psi3(spec.ml, spec.eta1, spec.eta2, spec.eta1 + spec.eta2, x, ctrl.tightened(100.0));
}

/// Value of thm24_closed at q = 0 in closed form:
/// (xi+1)^{-eta1} (sigma+1)^{-eta2} / ((a2-a1) prod Γ(omega_i)).
inline double thm24_q0_collapse(const OperatorSpec& spec)
{
    spec.validate();
    const auto& k = detail::expect_kernel<WeightedDenominator>(spec, "thm24_q0_collapse");
    return std::pow(k.xi + 1.0, -spec.eta1) * std::pow(k.sigma + 1.0, -spec.eta2) / spec.length() *
           spec.ml.value_at_zero();
}

/// n-fold series grouped by total degree d = r_1 + ... + r_n: the Wright
/// factor depends on d only, so each degree block of the product of
/// binomial series multiplies a single Wright value.
inline complex thm41_series(const OperatorSpec& spec, const SeriesControl& ctrl = {})
{
    spec.validate();
    const auto& k = detail::expect_kernel<MultiFactor>(spec, "thm41_series");
    const SeriesControl inner = ctrl.tightened(100.0);
    std::vector<DegreeBlocks::Ratio> ratios;
    for (std::size_t i = 0; i < k.zs.size(); ++i) ratios.push_back(DegreeBlocks::binomial(k.betas[i], k.zs[i]));
    DegreeBlocks blocks(std::move(ratios));
    auto term = [&](std::size_t d) -> complex {
        const double coef = blocks.next();
        if (coef == 0.0) return {0.0, 0.0};
        const double dd = static_cast<double>(d);
        return coef * detail::psi3(spec.ml, spec.eta1 + dd, spec.eta2, spec.eta1 + spec.eta2 + dd, spec.q, inner);
    };
    const auto r = compensated_sum<complex>(term, ctrl);
    return detail::finish_outer(r, "thm41_series") / beta_fn(spec.eta1, spec.eta2);
}

/// Series / closed-form path for whichever kernel the spec carries.
inline complex series_operator(const OperatorSpec& spec, const SeriesControl& ctrl = {})
{
    switch (spec.kernel.index()) {
    case 0: return thm21_series(spec, ctrl);
    case 1: return thm22_series(spec, ctrl);
    case 2: return thm23_series(spec, ctrl);
    case 3: return thm24_closed(spec, ctrl);
    default: return thm41_series(spec, ctrl);
    }
}

} // namespace mlbeta
