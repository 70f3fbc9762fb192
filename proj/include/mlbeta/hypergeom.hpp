#pragma once

///
/// \file hypergeom.hpp
///
/// Classical hypergeometric family on real arguments: Gauss 2F1, Kummer
/// 1F1, Appell F1 and F3, Lauricella F_D, Humbert Φ2 and Gegenbauer
/// polynomials. Plain power series inside the unit polydisc; no
/// transformation formulas.
///
/// Multiple series are summed by total degree: the degree-d block is one
/// term of the outer compensated sum, so the SeriesControl rule applies to
/// whole blocks.
///

#include <mlbeta/multi_series.hpp>
#include <mlbeta/numeric_kernel.hpp>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace mlbeta {

namespace detail {

inline void require_denominator(double c, const char* who)
{
    if (is_gamma_pole(c))
        throw ParameterError(std::string(who) + ": denominator parameter is a nonpositive integer");
}

inline void require_unit_disc(double x, const char* who)
{
    if (!(std::abs(x) < 1.0)) throw DomainError(std::string(who) + ": argument must satisfy |x| < 1");
}

inline double finish(const SeriesResult<double>& r, const char* who)
{
    if (!r.converged)
        throw ConvergenceError(std::string(who) + ": series not converged after " + std::to_string(r.terms_used) + " terms");
    return r.value;
}

inline bool terminates(double a) { return is_gamma_pole(a); }

// Sum over d of (a)_d / (c)_d * block(d); with_a = false drops the (a)_d factor.
inline double degree_sum(DegreeBlocks& blocks, double a, double c, bool with_a, const SeriesControl& ctrl, const char* who)
{
    double coef = 1.0;
    auto term = [&](std::size_t d) {
        if (d > 0) {
            const double dd = static_cast<double>(d - 1);
            coef *= (with_a ? (a + dd) : 1.0) / (c + dd);
        }
        return coef * blocks.next();
    };
    return finish(compensated_sum<double>(term, ctrl), who);
}

} // namespace detail

/// Gauss 2F1(a, b; c; x) = sum (a)_k (b)_k / ((c)_k k!) x^k, |x| < 1.
///
/// A nonpositive integer a or b terminates the series, in which case any x
/// is accepted.
inline double gauss_2f1(double a, double b, double c, double x, const SeriesControl& ctrl = {})
{
    ctrl.validate();
    detail::require_denominator(c, "gauss_2f1");
    if (!detail::terminates(a) && !detail::terminates(b)) detail::require_unit_disc(x, "gauss_2f1");
    double t = 1.0;
    auto term = [&](std::size_t k) {
        if (k > 0) {
            const double kk = static_cast<double>(k - 1);
            t *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * x;
        }
        return t;
    };
    return detail::finish(compensated_sum<double>(term, ctrl), "gauss_2f1");
}

/// Kummer 1F1(a; c; x) = sum (a)_k / ((c)_k k!) x^k.
inline double kummer_1f1(double a, double c, double x, const SeriesControl& ctrl = {})
{
    ctrl.validate();
    detail::require_denominator(c, "kummer_1f1");
    double t = 1.0;
    auto term = [&](std::size_t k) {
        if (k > 0) {
            const double kk = static_cast<double>(k - 1);
            t *= (a + kk) / ((c + kk) * (kk + 1.0)) * x;
        }
        return t;
    };
    return detail::finish(compensated_sum<double>(term, ctrl), "kummer_1f1");
}

/// Lauricella F_D^{(n)}(a; b_1..b_n; c; z_1..z_n), max |z_i| < 1.
inline double lauricella_fd(double a, const std::vector<double>& b, double c, const std::vector<double>& z,
                            const SeriesControl& ctrl = {})
{
    ctrl.validate();
    if (b.empty() || b.size() != z.size())
        throw ParameterError("lauricella_fd: b and z must be nonempty and of equal length");
    detail::require_denominator(c, "lauricella_fd");
    std::vector<DegreeBlocks::Ratio> ratios;
    for (std::size_t i = 0; i < b.size(); ++i) {
        detail::require_unit_disc(z[i], "lauricella_fd");
        ratios.push_back(DegreeBlocks::binomial(b[i], z[i]));
    }
    DegreeBlocks blocks(std::move(ratios));
    return detail::degree_sum(blocks, a, c, true, ctrl, "lauricella_fd");
}

/// Appell F1(a; b1, b2; c; x, y) = sum (a)_{r+s} (b1)_r (b2)_s / ((c)_{r+s} r! s!) x^r y^s.
inline double appell_f1(double a, double b1, double b2, double c, double x, double y, const SeriesControl& ctrl = {})
{
    ctrl.validate();
    detail::require_denominator(c, "appell_f1");
    detail::require_unit_disc(x, "appell_f1");
    detail::require_unit_disc(y, "appell_f1");
    DegreeBlocks blocks({DegreeBlocks::binomial(b1, x), DegreeBlocks::binomial(b2, y)});
    return detail::degree_sum(blocks, a, c, true, ctrl, "appell_f1");
}

/// Appell F3(a1, a2; b1, b2; c; x, y) = sum (a1)_r (a2)_s (b1)_r (b2)_s / ((c)_{r+s} r! s!) x^r y^s.
inline double appell_f3(double a1, double a2, double b1, double b2, double c, double x, double y,
                        const SeriesControl& ctrl = {})
{
    ctrl.validate();
    detail::require_denominator(c, "appell_f3");
    detail::require_unit_disc(x, "appell_f3");
    detail::require_unit_disc(y, "appell_f3");
    auto pair_ratio = [](double p, double q, double v) {
        return [p, q, v](std::size_t r) {
            const double rr = static_cast<double>(r);
            return (p + rr) * (q + rr) * v / (rr + 1.0);
        };
    };
    DegreeBlocks blocks({pair_ratio(a1, b1, x), pair_ratio(a2, b2, y)});
    return detail::degree_sum(blocks, 0.0, c, false, ctrl, "appell_f3");
}

/// Humbert Φ2(b1, b2; c; x, y) = sum (b1)_r (b2)_s / ((c)_{r+s} r! s!) x^r y^s, entire.
inline double humbert_phi2(double b1, double b2, double c, double x, double y, const SeriesControl& ctrl = {})
{
    ctrl.validate();
    detail::require_denominator(c, "humbert_phi2");
    DegreeBlocks blocks({DegreeBlocks::binomial(b1, x), DegreeBlocks::binomial(b2, y)});
    return detail::degree_sum(blocks, 0.0, c, false, ctrl, "humbert_phi2");
}

/// Gegenbauer polynomial C_r^{(alpha)}(u) by the three-term recurrence
/// r C_r = 2u(r+alpha-1) C_{r-1} - (r+2alpha-2) C_{r-2}.
inline double gegenbauer(std::size_t r, double alpha, double u)
{
    if (r == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * alpha * u;
    for (std::size_t k = 2; k <= r; ++k) {
        const double kk = static_cast<double>(k);
        const double next = (2.0 * u * (kk + alpha - 1.0) * cur - (kk + 2.0 * alpha - 2.0) * prev) / kk;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace mlbeta
