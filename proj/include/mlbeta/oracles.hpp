#pragma once

///
/// \file oracles.hpp
///
/// Independent reference implementations used to check the production
/// series engines: classical power series for Bessel, Lommel and Struve
/// functions, and brute-force fixed-cap summation of the hypergeometric,
/// Mittag-Leffler and Wright series.
///
/// Nothing here calls the production engines or shares their truncation
/// logic; the only shared code is the gamma-family primitives.
///

#include <mlbeta/numeric_kernel.hpp>
#include <mlbeta/wright.hpp>

#include <cmath>
#include <cstddef>
#include <vector>

namespace mlbeta::oracle {

struct OracleValue {
    complex value;
    /// The final degree block (or term) still exceeds 1e-15 of the sum.
    bool cap_warning = false;
};

namespace detail {

// Runs a plain power series t_0, t_0*ratio(0), ... until two consecutive
// terms fall below 1e-17 of the sum.
template <class Ratio>
double power_series(double t0, Ratio&& ratio)
{
    CompensatedAccumulator acc;
    double t = t0;
    int small = 0;
    for (int k = 0; k < 2000; ++k) {
        acc.add(t);
        if (std::abs(t) <= 1e-17 * std::abs(acc.value())) {
            if (++small == 2) break;
        } else {
            small = 0;
        }
        t *= ratio(k);
    }
    return acc.value();
}

struct LogPoch {
    double value = 0.0;
    int sign = 1;
    bool zero = false;
};

// ln|(a)_n| via gamma differences; a nonpositive integer with n past it
// gives an exact zero.
inline LogPoch log_poch(double a, std::size_t n)
{
    LogPoch r;
    if (n == 0) return r;
    if (is_gamma_pole(a)) {
        if (static_cast<double>(n) > -std::round(a)) {
            r.zero = true;
            return r;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double f = a + static_cast<double>(i);
            r.value += std::log(std::abs(f));
            if (f < 0) r.sign = -r.sign;
        }
        return r;
    }
    const auto hi = ln_gamma(a + static_cast<double>(n));
    const auto lo = ln_gamma(a);
    r.value = hi.value - lo.value;
    r.sign = hi.sign * lo.sign;
    return r;
}

struct LogTerm {
    double value = 0.0;
    int sign = 1;
    bool zero = false;

    void mul_poch(double a, std::size_t n) { apply(log_poch(a, n), 1); }
    void div_poch(double a, std::size_t n)
    {
        const auto p = log_poch(a, n);
        if (p.zero) throw DomainError("oracle: denominator Pochhammer symbol vanishes");
        apply(p, -1);
    }
    void div_factorial(std::size_t n) { value -= ln_gamma(static_cast<double>(n) + 1.0).value; }
    void mul_power(double x, std::size_t n)
    {
        if (n == 0) return;
        if (x == 0.0) {
            zero = true;
            return;
        }
        value += static_cast<double>(n) * std::log(std::abs(x));
        if (x < 0 && (n & 1u)) sign = -sign;
    }
    [[nodiscard]] double get() const { return zero ? 0.0 : sign * std::exp(value); }

private:
    void apply(const LogPoch& p, int dir)
    {
        if (p.zero) {
            zero = true;
            return;
        }
        value += dir * p.value;
        sign *= p.sign;
    }
};

inline bool block_warning(double block_abs, double sum)
{
    return block_abs > 1e-15 * std::abs(sum);
}

} // namespace detail

//==============================================================================
// Classical cylinder-function series
//==============================================================================

/// Bessel J_nu(z) = sum (-1)^k (z/2)^{2k+nu} / (k! Γ(k+nu+1)), z > 0.
inline double bessel_j(double nu, double z)
{
    const double h = 0.5 * z;
    const double t0 = std::pow(h, nu) * rgamma(nu + 1.0);
    return detail::power_series(t0, [&](int k) { return -h * h / ((k + 1.0) * (k + nu + 1.0)); });
}

/// Lommel s_{mu,nu}(z) = sum_k (-1)^k z^{mu+1+2k} / prod_{j=1}^{k+1} ((mu+2j-1)^2 - nu^2).
inline double lommel_s(double mu, double nu, double z)
{
    auto den = [&](int j) {
        const double a = mu + 2.0 * j - 1.0;
        return a * a - nu * nu;
    };
    const double d1 = den(1);
    if (d1 == 0.0) throw DomainError("lommel_s: mu +- nu hits an excluded value");
    const double t0 = std::pow(z, mu + 1.0) / d1;
    return detail::power_series(t0, [&](int k) {
        const double d = den(k + 2);
        if (d == 0.0) throw DomainError("lommel_s: mu +- nu hits an excluded value");
        return -z * z / d;
    });
}

/// Struve H_nu(z) = sum (-1)^k (z/2)^{2k+nu+1} / (Γ(k+3/2) Γ(k+nu+3/2)).
inline double struve_h(double nu, double z)
{
    const double h = 0.5 * z;
    const double t0 = std::pow(h, nu + 1.0) * rgamma(1.5) * rgamma(nu + 1.5);
    return detail::power_series(t0, [&](int k) { return -h * h / ((k + 1.5) * (k + nu + 1.5)); });
}

//==============================================================================
// Brute-force fixed-cap summations
//==============================================================================

/// Appell F1 summed over the full square 0 <= r, s <= cap.
inline OracleValue brute_f1(double a, double b1, double b2, double c, double x, double y, std::size_t cap)
{
    CompensatedAccumulator acc;
    double edge = 0.0;
    for (std::size_t r = 0; r <= cap; ++r)
        for (std::size_t s = 0; s <= cap; ++s) {
            detail::LogTerm t;
            t.mul_poch(a, r + s);
            t.mul_poch(b1, r);
            t.mul_poch(b2, s);
            t.div_poch(c, r + s);
            t.div_factorial(r);
            t.div_factorial(s);
            t.mul_power(x, r);
            t.mul_power(y, s);
            const double v = t.get();
            acc.add(v);
            if (r == cap || s == cap) edge += std::abs(v);
        }
    return {acc.value(), detail::block_warning(edge, acc.value())};
}

/// Appell F3 summed over the full square 0 <= r, s <= cap.
inline OracleValue brute_f3(double a1, double a2, double b1, double b2, double c, double x, double y, std::size_t cap)
{
    CompensatedAccumulator acc;
    double edge = 0.0;
    for (std::size_t r = 0; r <= cap; ++r)
        for (std::size_t s = 0; s <= cap; ++s) {
            detail::LogTerm t;
            t.mul_poch(a1, r);
            t.mul_poch(a2, s);
            t.mul_poch(b1, r);
            t.mul_poch(b2, s);
            t.div_poch(c, r + s);
            t.div_factorial(r);
            t.div_factorial(s);
            t.mul_power(x, r);
            t.mul_power(y, s);
            const double v = t.get();
            acc.add(v);
            if (r == cap || s == cap) edge += std::abs(v);
        }
    return {acc.value(), detail::block_warning(edge, acc.value())};
}

/// Humbert Φ2 summed over the full square 0 <= r, s <= cap.
inline OracleValue brute_phi2(double b1, double b2, double c, double x, double y, std::size_t cap)
{
    CompensatedAccumulator acc;
    double edge = 0.0;
    for (std::size_t r = 0; r <= cap; ++r)
        for (std::size_t s = 0; s <= cap; ++s) {
            detail::LogTerm t;
            t.mul_poch(b1, r);
            t.mul_poch(b2, s);
            t.div_poch(c, r + s);
            t.div_factorial(r);
            t.div_factorial(s);
            t.mul_power(x, r);
            t.mul_power(y, s);
            const double v = t.get();
            acc.add(v);
            if (r == cap || s == cap) edge += std::abs(v);
        }
    return {acc.value(), detail::block_warning(edge, acc.value())};
}

/// Lauricella F_D^{(n)} summed over all multi-indices of total degree <= cap.
inline OracleValue brute_fd(double a, const std::vector<double>& b, double c, const std::vector<double>& z, std::size_t cap)
{
    if (b.size() != z.size() || b.empty()) throw ParameterError("brute_fd: b and z must be nonempty and of equal length");
    const std::size_t n = b.size();
    CompensatedAccumulator acc;
    double last = 0.0;
    std::vector<std::size_t> idx(n, 0);
    // Odometer over the simplex r_1 + ... + r_n <= cap.
    while (true) {
        std::size_t deg = 0;
        for (auto r : idx) deg += r;
        detail::LogTerm t;
        t.mul_poch(a, deg);
        t.div_poch(c, deg);
        for (std::size_t i = 0; i < n; ++i) {
            t.mul_poch(b[i], idx[i]);
            t.div_factorial(idx[i]);
            t.mul_power(z[i], idx[i]);
        }
        const double v = t.get();
        acc.add(v);
        if (deg == cap) last += std::abs(v);

        std::size_t i = 0;
        for (; i < n; ++i) {
            if (deg < cap) {
                ++idx[i];
                break;
            }
            deg -= idx[i];
            idx[i] = 0;
        }
        if (i == n) break;
    }
    return {acc.value(), detail::block_warning(last, acc.value())};
}

/// Gauss 2F1 summed to k = cap.
inline OracleValue brute_2f1(double a, double b, double c, double x, std::size_t cap)
{
    CompensatedAccumulator acc;
    double last = 0.0;
    for (std::size_t k = 0; k <= cap; ++k) {
        detail::LogTerm t;
        t.mul_poch(a, k);
        t.mul_poch(b, k);
        t.div_poch(c, k);
        t.div_factorial(k);
        t.mul_power(x, k);
        last = t.get();
        acc.add(last);
    }
    return {acc.value(), detail::block_warning(std::abs(last), acc.value())};
}

/// Kummer 1F1 summed to k = cap.
inline OracleValue brute_1f1(double a, double c, double x, std::size_t cap)
{
    CompensatedAccumulator acc;
    double last = 0.0;
    for (std::size_t k = 0; k <= cap; ++k) {
        detail::LogTerm t;
        t.mul_poch(a, k);
        t.div_poch(c, k);
        t.div_factorial(k);
        t.mul_power(x, k);
        last = t.get();
        acc.add(last);
    }
    return {acc.value(), detail::block_warning(std::abs(last), acc.value())};
}

/// Multi-index Mittag-Leffler series sum_{k<=cap} z^k / prod Γ(omega_i + eps_i k).
inline OracleValue brute_ml(const std::vector<double>& eps, const std::vector<double>& omega, complex z, std::size_t cap)
{
    if (eps.size() != omega.size()) throw ParameterError("brute_ml: eps and omega lengths differ");
    CompensatedAccumulator re, im;
    complex last{};
    complex zk{1.0, 0.0};
    for (std::size_t k = 0; k <= cap; ++k, zk *= z) {
        double den = 1.0;
        for (std::size_t i = 0; i < eps.size(); ++i) den *= rgamma(omega[i] + eps[i] * static_cast<double>(k));
        last = den * zk;
        re.add(last.real());
        im.add(last.imag());
    }
    const complex v{re.value(), im.value()};
    return {v, std::abs(last) > 1e-15 * std::abs(v)};
}

/// Wright series evaluated term by term from scratch up to k = cap.
inline OracleValue brute_wright(const WrightParams& p, complex x, std::size_t cap)
{
    CompensatedAccumulator re, im;
    complex last{};
    complex xk{1.0, 0.0};
    for (std::size_t k = 0; k <= cap; ++k, xk *= x) {
        const double kk = static_cast<double>(k);
        double coef = rgamma(kk + 1.0);
        for (const auto& u : p.upper) coef *= gamma_fn(u.value + u.weight * kk);
        for (const auto& l : p.lower) coef *= rgamma(l.value + l.weight * kk);
        if (coef == 0.0 || !std::isfinite(coef) || !std::isfinite(std::abs(xk))) {
            // Fall back to log space when the plain product over/underflows.
            double lg = -ln_gamma(kk + 1.0).value;
            int sign = 1;
            bool zero = false;
            for (const auto& u : p.upper) {
                const auto g = ln_gamma(u.value + u.weight * kk);
                lg += g.value;
                sign *= g.sign;
            }
            for (const auto& l : p.lower) {
                const double a = l.value + l.weight * kk;
                if (is_gamma_pole(a)) {
                    zero = true;
                    break;
                }
                const auto g = ln_gamma(a);
                lg -= g.value;
                sign *= g.sign;
            }
            if (zero || x == complex(0.0, 0.0)) {
                last = (zero || k > 0) ? complex{} : complex(sign * std::exp(lg), 0.0);
            } else {
                last = sign * std::exp(lg + kk * std::log(std::abs(x))) * std::exp(complex(0.0, kk * std::arg(x)));
            }
        } else {
            last = coef * xk;
        }
        re.add(last.real());
        im.add(last.imag());
    }
    const complex v{re.value(), im.value()};
    return {v, std::abs(last) > 1e-15 * std::abs(v)};
}

} // namespace mlbeta::oracle
