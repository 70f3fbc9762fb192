#pragma once

///
/// \file mittag_leffler.hpp
///
/// Multi-index Mittag-Leffler function
///
///   E_{(eps_i),(omega_i)}(z) = sum_k z^k / (Γ(omega_1 + eps_1 k) ... Γ(omega_l + eps_l k))
///
/// and its one-index special cases (classical E_λ and the Wiman function
/// E_{λ,μ}). Parameter lists always mean the eps_i appearing inside the
/// gamma arguments.
///

#include <mlbeta/numeric_kernel.hpp>
#include <mlbeta/oracles.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace mlbeta {

struct MLParams {
    std::vector<double> eps;
    std::vector<double> omega;

    [[nodiscard]] std::size_t size() const { return eps.size(); }

    [[nodiscard]] double sum_eps() const
    {
        double s = 0.0;
        for (double e : eps) s += e;
        return s;
    }

    void validate() const
    {
        if (eps.size() != omega.size()) throw ParameterError("MLParams: eps and omega lengths differ");
        if (eps.empty()) throw ParameterError("MLParams: at least one index pair required");
        for (double e : eps)
            if (!(e >= 0.0) || !std::isfinite(e)) throw ParameterError("MLParams: eps entries must be finite and >= 0");
        for (double w : omega)
            if (!std::isfinite(w)) throw ParameterError("MLParams: omega entries must be finite");
    }

    /// prod_i 1/Γ(omega_i), the value at z = 0.
    [[nodiscard]] double value_at_zero() const
    {
        double p = 1.0;
        for (double w : omega) p *= rgamma(w);
        return p;
    }
};

/// Series value with diagnostics. Terms whose denominator contains a gamma
/// pole vanish.
inline SeriesResult<complex> ml_multi_sum(const MLParams& p, complex z, const SeriesControl& ctrl = {})
{
    p.validate();
    ctrl.validate();
    if (p.sum_eps() == 0.0 && !(std::abs(z) < 1.0))
        throw ConvergenceError("ml_multi: all eps are zero, so the series is geometric and needs |z| < 1");

    std::size_t lead = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.eps[i] > 0.0 && p.omega[i] <= 0.0)
            lead = std::max(lead, static_cast<std::size_t>(std::floor(-p.omega[i] / p.eps[i])) + 1);

    const bool zero_arg = (z == complex(0.0, 0.0));
    const double log_abs_z = zero_arg ? 0.0 : std::log(std::abs(z));

    auto term = [&](std::size_t k) -> complex {
        if (k > 0 && zero_arg) return {0.0, 0.0};
        const double kk = static_cast<double>(k);
        double lg = 0.0;
        int sign = 1;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double a = p.omega[i] + p.eps[i] * kk;
            if (is_gamma_pole(a)) return {0.0, 0.0};
            const auto g = ln_gamma(a);
            lg -= g.value;
            sign *= g.sign;
        }
        if (k == 0) return {sign * std::exp(lg), 0.0};
        return sign * std::exp(lg + kk * log_abs_z) * unit_phase(z, k);
    };
    return compensated_sum<complex>(term, ctrl, lead);
}

/// Multi-index Mittag-Leffler function; throws ConvergenceError when the
/// series is divergent or unsettled.
inline complex ml_multi(const MLParams& p, complex z, const SeriesControl& ctrl = {})
{
    const auto r = ml_multi_sum(p, z, ctrl);
    if (!r.converged)
        throw ConvergenceError("ml_multi: series not converged after " + std::to_string(r.terms_used) + " terms");
    return r.value;
}

/// Classical E_λ(z) = sum z^k / Γ(1 + λk).
inline complex ml_classical(double lambda, complex z, const SeriesControl& ctrl = {})
{
    if (!(lambda >= 0.0)) throw DomainError("ml_classical: lambda must be >= 0");
    return ml_multi(MLParams{{lambda}, {1.0}}, z, ctrl);
}

/// Wiman function E_{λ,μ}(z) = sum z^k / Γ(μ + λk).
inline complex wiman(double lambda, double mu, complex z, const SeriesControl& ctrl = {})
{
    if (!(lambda >= 0.0)) throw DomainError("wiman: lambda must be >= 0");
    return ml_multi(MLParams{{lambda}, {mu}}, z, ctrl);
}

//==============================================================================
// Reductions to cylinder functions
//==============================================================================

enum class ReductionKind { bessel, lommel, struve };

inline const char* to_string(ReductionKind k)
{
    switch (k) {
    case ReductionKind::bessel: return "bessel";
    case ReductionKind::lommel: return "lommel";
    case ReductionKind::struve: return "struve";
    }
    return "?";
}

struct ReductionPoint {
    double z = 0.0;
    double lhs = 0.0;       ///< E(-z^2/4) with the reduction's parameters
    double prefactor = 0.0; ///< the closed-form prefactor multiplying the cylinder function
    double function = 0.0;  ///< independent cylinder-function value
    double ratio = 0.0;     ///< lhs / (prefactor * function)
};

struct ReductionReport {
    ReductionKind kind = ReductionKind::bessel;
    double mu = 0.0;
    double nu = 0.0;
    std::vector<ReductionPoint> points;
    double constant = 0.0; ///< measured ratio (mean over the grid)
    double spread = 0.0;   ///< max |ratio - constant| / |constant|
    double tolerance = 0.0;
    bool constant_ratio = false;
    /// Bessel only: every ratio equals 1 within 1e-10.
    bool exact = false;
};

/// Parameters of E_{(1,1),(omega_1,omega_2)} for each reduction.
///
///   bessel: (1+nu, 1),                    E(-z^2/4) = (z/2)^{-nu} J_nu(z)
///   lommel: ((3+mu-nu)/2, (3+mu+nu)/2),   E(-z^2/4) ~ 4/z^{mu+1} s_{mu,nu}(z)
///   struve: (3/2, 3/2+nu),                E(-z^2/4) ~ 4/z^{nu+1} H_nu(z)
///
/// The lommel and struve prefactors are fixed as listed above; the measured
/// constant ratio is reported rather than assumed.
inline MLParams reduction_params(ReductionKind kind, double mu, double nu)
{
    switch (kind) {
    case ReductionKind::bessel: return {{1.0, 1.0}, {1.0 + nu, 1.0}};
    case ReductionKind::lommel: return {{1.0, 1.0}, {(3.0 + mu - nu) / 2.0, (3.0 + mu + nu) / 2.0}};
    case ReductionKind::struve: return {{1.0, 1.0}, {1.5, 1.5 + nu}};
    }
    throw ParameterError("reduction_params: unknown kind");
}

/// Evaluates the reduction identity on a z grid and checks that
/// LHS / (prefactor * function) is constant to `tol` relative.
inline ReductionReport reduction_check(ReductionKind kind, double mu, double nu, const std::vector<double>& z_grid,
                                       double tol = 1e-9, const SeriesControl& ctrl = {})
{
    if (z_grid.empty()) throw DomainError("reduction_check: empty z grid");
    for (double z : z_grid)
        if (!(z > 0.0 && z <= 10.0)) throw DomainError("reduction_check: z must lie in (0, 10]");
    switch (kind) {
    case ReductionKind::bessel:
        if (!(nu > -1.0)) throw DomainError("reduction_check: Bessel order must exceed -1");
        break;
    case ReductionKind::lommel:
        if (is_gamma_pole((mu - nu + 1.0) / 2.0) || is_gamma_pole((mu + nu + 1.0) / 2.0))
            throw DomainError("reduction_check: Lommel orders put (mu +- nu + 1)/2 on a gamma pole");
        break;
    case ReductionKind::struve:
        if (is_gamma_pole(nu + 1.5)) throw DomainError("reduction_check: Struve order hits a gamma pole");
        break;
    }

    ReductionReport rep;
    rep.kind = kind;
    rep.mu = mu;
    rep.nu = nu;
    rep.tolerance = tol;
    const MLParams params = reduction_params(kind, mu, nu);
    for (double z : z_grid) {
        ReductionPoint pt;
        pt.z = z;
        pt.lhs = ml_multi(params, complex(-z * z / 4.0, 0.0), ctrl).real();
        switch (kind) {
        case ReductionKind::bessel:
            pt.prefactor = std::pow(z / 2.0, -nu);
            pt.function = oracle::bessel_j(nu, z);
            break;
        case ReductionKind::lommel:
            pt.prefactor = 4.0 / std::pow(z, mu + 1.0);
            pt.function = oracle::lommel_s(mu, nu, z);
            break;
        case ReductionKind::struve:
            pt.prefactor = 4.0 / std::pow(z, nu + 1.0);
            pt.function = oracle::struve_h(nu, z);
            break;
        }
        pt.ratio = pt.lhs / (pt.prefactor * pt.function);
        rep.points.push_back(pt);
    }
    double mean = 0.0;
    for (const auto& pt : rep.points) mean += pt.ratio;
    mean /= static_cast<double>(rep.points.size());
    rep.constant = mean;
    double spread = 0.0;
    bool exact = true;
    for (const auto& pt : rep.points) {
        spread = std::max(spread, std::abs(pt.ratio - mean) / std::abs(mean));
        if (!(std::abs(pt.ratio - 1.0) <= 1e-10)) exact = false;
    }
    rep.spread = spread;
    rep.constant_ratio = spread <= tol;
    rep.exact = kind == ReductionKind::bessel && exact;
    return rep;
}

} // namespace mlbeta
