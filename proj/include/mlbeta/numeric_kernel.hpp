#pragma once

///
/// \file numeric_kernel.hpp
///
/// Gamma-family primitives and compensated series summation shared by every
/// other part of the library.
///

#include <mlbeta/error.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace mlbeta {

using complex = std::complex<double>;

/// Truncation policy for infinite series.
///
/// Summation stops after `quiet_terms` consecutive terms whose magnitude is
/// at most `rel_tol` times the magnitude of the running sum (or at most
/// `rel_tol` in absolute terms while the running sum is exactly zero).
struct SeriesControl {
    double rel_tol = 1e-14;
    std::size_t max_terms = 10'000;
    std::size_t quiet_terms = 3;

    void validate() const
    {
        if (!(rel_tol > 0.0)) throw ParameterError("SeriesControl: rel_tol must be > 0");
        if (max_terms < 1) throw ParameterError("SeriesControl: max_terms must be >= 1");
        if (quiet_terms < 1) throw ParameterError("SeriesControl: quiet_terms must be >= 1");
    }

    /// Same policy with a tolerance tightened by `factor`.
    [[nodiscard]] SeriesControl tightened(double factor) const
    {
        SeriesControl c = *this;
        c.rel_tol = rel_tol / factor;
        return c;
    }
};

template <class T>
struct SeriesResult {
    T value{};
    std::size_t terms_used = 0;
    bool converged = false;
};

//==============================================================================
// Gamma family
//==============================================================================

/// ln|Γ(x)| together with the sign of Γ(x).
struct LogGamma {
    double value = 0.0;
    int sign = 1;
};

namespace detail {

inline constexpr double pole_eps = 1e-12;

inline bool near_nonpositive_integer(double x)
{
    return x <= 0.5 && std::abs(x - std::round(x)) < pole_eps && std::round(x) <= 0.0;
}

inline double lgamma_abs(double x)
{
#if defined(__GLIBC__)
    int s = 0;
    return ::lgamma_r(x, &s);
#else
    return std::lgamma(x);
#endif
}

inline long double lgamma_abs(long double x)
{
#if defined(__GLIBC__)
    int s = 0;
    return ::lgammal_r(x, &s);
#else
    return std::lgamma(x);
#endif
}

} // namespace detail

/// True when x is (within 1e-12) one of 0, -1, -2, ...
inline bool is_gamma_pole(double x) { return detail::near_nonpositive_integer(x); }

/// Natural log of |Γ(x)| and the sign of Γ(x).
///
/// Throws PoleError at nonpositive integers. For negative non-integer x the
/// sign alternates between the unit intervals: Γ < 0 on (-1,0), (-3,-2), ...
inline LogGamma ln_gamma(double x)
{
    if (std::isnan(x)) throw DomainError("ln_gamma: NaN argument");
    if (is_gamma_pole(x)) throw PoleError("ln_gamma: pole at x = " + std::to_string(x));
    LogGamma r;
    r.value = detail::lgamma_abs(x);
    if (x < 0.0) {
        const auto fl = static_cast<long long>(std::floor(x));
        r.sign = (fl % 2 == 0) ? 1 : -1;
    }
    return r;
}

/// Γ(x) assembled from ln_gamma; overflows to ±inf for large x.
inline double gamma_fn(double x)
{
    const auto lg = ln_gamma(x);
    return lg.sign * std::exp(lg.value);
}

/// Reciprocal gamma 1/Γ(x), a total function: exactly 0 at the poles.
inline double rgamma(double x)
{
    if (std::isnan(x)) return x;
    if (is_gamma_pole(x)) return 0.0;
    if (x > 0.0 && x < 170.0) return 1.0 / std::tgamma(x);
    if (x < 0.0 && x > -170.0) return 1.0 / std::tgamma(x);
    const auto lg = ln_gamma(x);
    return lg.sign * std::exp(-lg.value);
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
///
/// Multiplies directly while the running product stays representable, then
/// continues in log space with the sign tracked separately.
inline double pochhammer(double a, std::size_t n)
{
    double p = 1.0;
    std::size_t i = 0;
    for (; i < n; ++i) {
        const double f = a + static_cast<double>(i);
        if (f == 0.0) return 0.0;
        if (std::abs(p) > 1e290 || std::abs(p) < 1e-290) break;
        p *= f;
    }
    if (i == n) return p;
    double lg = std::log(std::abs(p));
    int sign = p < 0.0 ? -1 : 1;
    for (; i < n; ++i) {
        const double f = a + static_cast<double>(i);
        if (f == 0.0) return 0.0;
        lg += std::log(std::abs(f));
        if (f < 0.0) sign = -sign;
    }
    return sign * std::exp(lg);
}

/// Beta function B(x, y) = Γ(x)Γ(y)/Γ(x+y) for x, y > 0.
///
/// Arguments are sorted first so B(x,y) and B(y,x) are bit-identical.
inline double beta_fn(double x, double y)
{
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("beta_fn: arguments must be positive");
    if (x > y) std::swap(x, y);
    if (x + y < 170.0)
        return std::tgamma(x) * (std::tgamma(y) / std::tgamma(x + y));
    return std::exp(detail::lgamma_abs(x) + detail::lgamma_abs(y) - detail::lgamma_abs(x + y));
}

//==============================================================================
// Compensated summation
//==============================================================================

/// Neumaier's variant of Kahan summation for one real component.
template <class R>
class BasicCompensatedAccumulator {
public:
    void add(R x)
    {
        const R t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    [[nodiscard]] R value() const { return sum_ + comp_; }

private:
    R sum_ = 0;
    R comp_ = 0;
};

using CompensatedAccumulator = BasicCompensatedAccumulator<double>;

namespace detail {

template <class T>
struct Accum {
    BasicCompensatedAccumulator<T> re;
    void add(T x) { re.add(x); }
    [[nodiscard]] T value() const { return re.value(); }
};

template <class R>
struct Accum<std::complex<R>> {
    BasicCompensatedAccumulator<R> re, im;
    void add(std::complex<R> x)
    {
        re.add(x.real());
        im.add(x.imag());
    }
    [[nodiscard]] std::complex<R> value() const { return {re.value(), im.value()}; }
};

} // namespace detail

/// Sums term(0), term(1), ... with compensated accumulation under `ctrl`.
///
/// `term` is invoked with strictly increasing indices starting at 0, so it
/// may carry state between calls. Quiet-term counting starts at index
/// `min_terms`; callers use it to step over leading terms that are zero for
/// structural reasons (gamma poles in the denominator).
template <class T, class TermFn>
SeriesResult<T> compensated_sum(TermFn&& term, const SeriesControl& ctrl, std::size_t min_terms = 0)
{
    detail::Accum<T> acc;
    std::size_t quiet = 0;
    SeriesResult<T> out;
    for (std::size_t k = 0; k < ctrl.max_terms; ++k) {
        const T t = term(k);
        acc.add(t);
        out.terms_used = k + 1;
        if (k < min_terms) continue;
        const auto partial = static_cast<double>(std::abs(acc.value()));
        const double bound = partial > 0.0 ? ctrl.rel_tol * partial : ctrl.rel_tol;
        if (!(static_cast<double>(std::abs(t)) <= bound)) {
            quiet = 0;
            continue;
        }
        if (++quiet >= ctrl.quiet_terms) {
            out.converged = true;
            break;
        }
    }
    out.value = acc.value();
    return out;
}

/// Complex-valued compensated series summation.
template <class TermFn>
SeriesResult<complex> kahan_sum_complex(TermFn&& term, const SeriesControl& ctrl)
{
    return compensated_sum<complex>(std::forward<TermFn>(term), ctrl);
}

/// x^k for real or complex x, exact sign for real negative bases.
inline complex unit_phase(complex x, std::size_t k)
{
    if (x.imag() == 0.0) return (x.real() < 0.0 && (k & 1u)) ? complex(-1.0, 0.0) : complex(1.0, 0.0);
    return std::polar(1.0, static_cast<double>(k) * std::arg(x));
}

} // namespace mlbeta
