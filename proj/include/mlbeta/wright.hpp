#pragma once

///
/// \file wright.hpp
///
/// Generalized Wright hypergeometric function
///
///   mPsin[(l_j, G_j); (m_j, H_j); x]
///       = sum_k  prod_j Γ(l_j + G_j k) / prod_j Γ(m_j + H_j k) * x^k / k!
///
/// with convergence index Δ = 1 + ΣH - ΣG. The series is entire for Δ > 0
/// and converges for |x| < ρ = ΠG^{-G} ΠH^{H} when Δ = 0.
///

#include <mlbeta/numeric_kernel.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace mlbeta {

/// One gamma factor Γ(value + weight * k) of a Wright series.
struct WrightPair {
    double value = 0.0;
    double weight = 1.0;
};

struct WrightParams {
    std::vector<WrightPair> upper;
    std::vector<WrightPair> lower;

    void validate() const
    {
        auto check = [](const std::vector<WrightPair>& v, const char* side) {
            for (const auto& p : v) {
                if (!std::isfinite(p.value) || !std::isfinite(p.weight))
                    throw ParameterError(std::string("wright: non-finite ") + side + " parameter");
                if (p.weight < 0.0)
                    throw ParameterError(std::string("wright: negative ") + side + " weight");
            }
        };
        check(upper, "upper");
        check(lower, "lower");
    }
};

/// Convergence index Δ = 1 + ΣH_j - ΣG_j.
inline double delta(const WrightParams& p)
{
    double d = 1.0;
    for (const auto& l : p.lower) d += l.weight;
    for (const auto& u : p.upper) d -= u.weight;
    return d;
}

/// Radius of convergence ΠG^{-G} ΠH^{H} of the balanced (Δ = 0) series.
inline double balanced_radius(const WrightParams& p)
{
    double lg = 0.0;
    for (const auto& u : p.upper)
        if (u.weight > 0.0) lg -= u.weight * std::log(u.weight);
    for (const auto& l : p.lower)
        if (l.weight > 0.0) lg += l.weight * std::log(l.weight);
    return std::exp(lg);
}

namespace detail {

inline constexpr double balanced_eps = 1e-12;

/// Tracks ln|Γ(a + w k)| for k = 0, 1, 2, ... in long double.
///
/// Integer weights step by the exact product (a+wk)(a+wk+1)...(a+wk+w-1);
/// other weights re-evaluate ln Γ at the new argument.
class GammaTrack {
public:
    GammaTrack(double a, double w) : a_(a), w_(w)
    {
        const double r = std::round(w);
        if (w == r && r <= 16.0) step_ = static_cast<int>(r);
        reset(0);
    }

    void advance()
    {
        if (step_ == 0) {
            ++k_;
            return;
        }
        if (step_ > 0 && !pole_) {
            const long double base = argument_ext();
            for (int i = 0; i < step_; ++i) {
                const long double f = base + i;
                log_ += std::log(std::abs(f));
                if (f < 0.0L) sign_ = -sign_;
            }
            ++k_;
            return;
        }
        reset(k_ + 1);
    }

    [[nodiscard]] bool pole() const { return pole_; }
    [[nodiscard]] long double log_value() const { return log_; }
    [[nodiscard]] int sign() const { return sign_; }
    [[nodiscard]] double argument() const { return a_ + w_ * static_cast<double>(k_); }

private:
    [[nodiscard]] long double argument_ext() const
    {
        return static_cast<long double>(a_) + static_cast<long double>(w_) * static_cast<long double>(k_);
    }

    void reset(std::size_t k)
    {
        k_ = k;
        pole_ = is_gamma_pole(argument());
        if (pole_) return;
        const long double x = argument_ext();
        log_ = lgamma_abs(x);
        sign_ = ln_gamma(argument()).sign;
    }

    double a_, w_;
    int step_ = -1; // -1: non-integer weight
    std::size_t k_ = 0;
    long double log_ = 0.0L;
    int sign_ = 1;
    bool pole_ = false;
};

inline void check_wright_domain(const WrightParams& p, complex x)
{
    p.validate();
    const double d = delta(p);
    if (d < -balanced_eps)
        throw ParameterError("wright: convergence index 1 + sum(H) - sum(G) = " + std::to_string(d) + " < 0");
    if (std::abs(d) <= balanced_eps) {
        const double rho = balanced_radius(p);
        if (std::abs(x) >= rho)
            throw ConvergenceError("wright: balanced series needs |x| < " + std::to_string(rho));
    }
}

/// Index before which lower-parameter poles may zero out every term.
inline std::size_t leading_pole_span(const std::vector<WrightPair>& lower)
{
    std::size_t span = 0;
    for (const auto& l : lower) {
        if (l.weight > 0.0 && l.value <= 0.0) {
            const auto k = static_cast<std::size_t>(std::floor(-l.value / l.weight)) + 1;
            span = std::max(span, k);
        }
    }
    return span;
}

} // namespace detail

/// Term k of the Wright series evaluated independently of every other term.
inline complex wright_term_direct(const WrightParams& p, complex x, std::size_t k)
{
    const double kk = static_cast<double>(k);
    double lg = 0.0;
    int sign = 1;
    for (const auto& u : p.upper) {
        const double a = u.value + u.weight * kk;
        if (is_gamma_pole(a)) throw PoleError("wright: upper parameter hits a gamma pole");
        const auto g = ln_gamma(a);
        lg += g.value;
        sign *= g.sign;
    }
    for (const auto& l : p.lower) {
        const double a = l.value + l.weight * kk;
        if (is_gamma_pole(a)) return {0.0, 0.0};
        const auto g = ln_gamma(a);
        lg -= g.value;
        sign *= g.sign;
    }
    lg -= ln_gamma(kk + 1.0).value;
    if (k == 0) return {sign * std::exp(lg), 0.0};
    if (x == complex(0.0, 0.0)) return {0.0, 0.0};
    return sign * std::exp(lg + kk * std::log(std::abs(x))) * unit_phase(x, k);
}

namespace detail {

using complex_ext = std::complex<long double>;

/// Produces the Wright series terms k = 0, 1, 2, ... in order, each from the
/// gamma tracks of the previous one.
///
/// Terms and their sum are carried in long double: for real negative x the
/// series cancels by up to e^{2|x|}, which double-rounded terms cannot absorb.
class WrightTerms {
public:
    WrightTerms(const WrightParams& p, complex x) : zero_arg_(x == complex(0.0, 0.0)), x_(x)
    {
        up_.reserve(p.upper.size());
        low_.reserve(p.lower.size() + 1);
        for (const auto& u : p.upper) up_.emplace_back(u.value, u.weight);
        for (const auto& l : p.lower) low_.emplace_back(l.value, l.weight);
        low_.emplace_back(1.0, 1.0); // k!
        log_abs_x_ = zero_arg_ ? 0.0L : std::log(std::abs(complex_ext(x)));
    }

    /// Term k; calls must use k = 0, 1, 2, ... in sequence.
    complex_ext operator()(std::size_t k)
    {
        if (k > 0) {
            if (zero_arg_) return {};
            for (auto& t : up_) t.advance();
            for (auto& t : low_) t.advance();
        }
        long double lg = 0.0L;
        int sign = 1;
        for (const auto& t : up_) {
            if (t.pole())
                throw PoleError("wright: upper parameter hits a gamma pole at argument " + std::to_string(t.argument()));
            lg += t.log_value();
            sign *= t.sign();
        }
        for (const auto& t : low_) {
            if (t.pole()) return {};
            lg -= t.log_value();
            sign *= t.sign();
        }
        const long double kk = static_cast<long double>(k);
        const long double mag = static_cast<long double>(sign) * std::exp(lg + kk * log_abs_x_);
        if (k == 0 || x_.imag() == 0.0) return {(x_.real() < 0.0 && (k & 1u)) ? -mag : mag, 0.0L};
        return std::polar(mag, kk * std::arg(complex_ext(x_)));
    }

private:
    std::vector<GammaTrack> up_, low_;
    bool zero_arg_;
    complex x_;
    long double log_abs_x_ = 0.0L;
};

} // namespace detail

/// The first n terms exactly as wright_sum generates them.
inline std::vector<complex> wright_terms(const WrightParams& p, complex x, std::size_t n)
{
    detail::check_wright_domain(p, x);
    detail::WrightTerms gen(p, x);
    std::vector<complex> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(complex(gen(k)));
    return out;
}

/// Wright series with its truncation diagnostics.
///
/// Terms are built incrementally in log space and summed in long double. A lower factor at a gamma
/// pole contributes 1/Γ = 0 and drops its term; an upper factor at a pole
/// throws PoleError.
inline SeriesResult<complex> wright_sum(const WrightParams& p, complex x, const SeriesControl& ctrl = {})
{
    ctrl.validate();
    detail::check_wright_domain(p, x);
    detail::WrightTerms gen(p, x);
    const auto r = compensated_sum<detail::complex_ext>(gen, ctrl, detail::leading_pole_span(p.lower));
    return {complex(r.value), r.terms_used, r.converged};
}

/// Value of the generalized Wright function; throws ConvergenceError if
/// the series did not settle within ctrl.max_terms.
inline complex wright_eval(const WrightParams& p, complex x, const SeriesControl& ctrl = {})
{
    const auto r = wright_sum(p, x, ctrl);
    if (!r.converged)
        throw ConvergenceError("wright: series not converged after " + std::to_string(r.terms_used) + " terms");
    return r.value;
}

} // namespace mlbeta
