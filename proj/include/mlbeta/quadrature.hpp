#pragma once

///
/// \file quadrature.hpp
///
/// Tanh-sinh (double-exponential) quadrature for integrals of the form
///
///   ∫_0^1 v^{alpha-1} (1-v)^{beta-1} f(v, 1-v) dv,   alpha, beta > 0,
///
/// with f smooth and complex-valued. The substitution
/// v = 1 / (1 + exp(-π sinh t)) gives both v and 1-v to full relative
/// accuracy near either endpoint, so the algebraic endpoint weights are
/// folded into the node weights in log space and never overflow.
///

#include <mlbeta/numeric_kernel.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>

namespace mlbeta {

struct QuadControl {
    /// Two successive levels must agree to abs_tol + rel_tol * |I|.
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    /// Total node budget across all levels.
    std::size_t max_nodes = std::size_t{1} << 20;
    /// Levels 0..min_level are always computed (step h = 2^-level).
    int min_level = 3;
    /// Half-width of the t interval; beyond ~6.1 one of v, 1-v underflows.
    double t_max = 6.1;
};

struct QuadResult {
    complex value;
    double error_estimate = 0.0;
    int levels = 0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Integrates v^{alpha-1} (1-v)^{beta-1} f(v, 1-v) over (0, 1).
///
/// `f` receives (v, 1-v) with both computed directly, not by subtraction.
template <class F>
QuadResult tanh_sinh_beta(double alpha, double beta, F&& f, const QuadControl& ctrl = {})
{
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw DomainError("tanh_sinh_beta: endpoint exponents must be positive");

    constexpr double pi = std::numbers::pi;
    QuadResult res;

    auto node = [&](double t) -> complex {
        const double s = pi * std::sinh(t);
        const double e = std::exp(-std::abs(s));
        double v, vc;
        if (s >= 0.0) {
            v = 1.0 / (1.0 + e);
            vc = e / (1.0 + e);
        } else {
            v = e / (1.0 + e);
            vc = 1.0 / (1.0 + e);
        }
        if (v <= 0.0 || vc <= 0.0) return {0.0, 0.0};
        // dv/dt = π cosh t · v (1-v); combined with the endpoint weights.
        const double log_w = std::log(pi * std::cosh(t)) + alpha * std::log(v) + beta * std::log(vc);
        if (log_w < -700.0) return {0.0, 0.0};
        ++res.evaluations;
        return std::exp(log_w) * f(v, vc);
    };

    // Level 0: nodes at integer t.
    double h = 1.0;
    const auto kmax0 = static_cast<long>(std::floor(ctrl.t_max));
    CompensatedAccumulator sre, sim;
    auto add = [&](complex z) {
        sre.add(z.real());
        sim.add(z.imag());
    };
    add(node(0.0));
    for (long k = 1; k <= kmax0; ++k) {
        const double t = static_cast<double>(k);
        add(node(t));
        add(node(-t));
    }
    complex prev = h * complex(sre.value(), sim.value());
    std::size_t nodes = 2 * static_cast<std::size_t>(kmax0) + 1;

    for (int level = 1;; ++level) {
        h *= 0.5;
        const auto kmax = static_cast<long>(std::floor(ctrl.t_max / h));
        const std::size_t fresh = static_cast<std::size_t>(kmax + 1);
        if (nodes + fresh > ctrl.max_nodes) {
            res.value = prev;
            res.levels = level - 1;
            return res;
        }
        for (long k = 1; k <= kmax; k += 2) {
            const double t = static_cast<double>(k) * h;
            add(node(t));
            add(node(-t));
        }
        nodes += fresh;
        const complex cur = h * complex(sre.value(), sim.value());
        res.error_estimate = std::abs(cur - prev);
        res.value = cur;
        res.levels = level;
        if (level >= ctrl.min_level && res.error_estimate <= ctrl.abs_tol + ctrl.rel_tol * std::abs(cur)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
}

/// tanh_sinh_beta that throws ConvergenceError when the node budget runs out.
template <class F>
complex integrate_beta_weighted(double alpha, double beta, F&& f, const QuadControl& ctrl = {})
{
    const auto r = tanh_sinh_beta(alpha, beta, std::forward<F>(f), ctrl);
    if (!r.converged)
        throw ConvergenceError("quadrature: no convergence after " + std::to_string(r.evaluations) +
                               " evaluations (last difference " + std::to_string(r.error_estimate) + ")");
    return r.value;
}

} // namespace mlbeta
