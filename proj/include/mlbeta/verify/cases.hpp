#pragma once

///
/// \file cases.hpp
///
/// Expansion of a Grid into concrete identity cases. Each case carries a
/// precondition check (failure means skip) and an evaluator returning
/// (lhs, rhs). Loops run in the order the coordinates are listed, which
/// fixes the lexicographic case order.
///

#include <mlbeta/beta_operator.hpp>
#include <mlbeta/genfun.hpp>
#include <mlbeta/mittag_leffler.hpp>
#include <mlbeta/text.hpp>
#include <mlbeta/verify/identity.hpp>

#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlbeta::verify {

struct CaseTask {
    TheoremId id = TheoremId::T2_1;
    nlohmann::ordered_json params;
    double tol = 0.0;
    std::function<void()> check;
    std::function<std::pair<complex, complex>()> eval;
};

namespace detail {

using json = nlohmann::ordered_json;

inline json ml_json(const MLParams& ml) { return {{"eps", ml.eps}, {"omega", ml.omega}}; }

inline std::string cx(complex z) { return text::format_complex(z); }

class Builder {
public:
    Builder(TheoremId id, std::optional<double> tol_override, std::vector<CaseTask>& out)
        : id_(id), override_(tol_override), out_(out)
    {
    }

    void add(json params, double tol, std::function<void()> check, std::function<std::pair<complex, complex>()> eval)
    {
        out_.push_back({id_, std::move(params), override_.value_or(tol), std::move(check), std::move(eval)});
    }

private:
    TheoremId id_;
    std::optional<double> override_;
    std::vector<CaseTask>& out_;
};

inline void operator_cases(Builder& b, const OperatorSpec& spec, json params, double tol)
{
    b.add(std::move(params), tol, [spec] { spec.validate(); },
          [spec] { return std::pair{quad_operator(spec), series_operator(spec)}; });
}

inline void expand_two_factor(Builder& b, const Grid& g, bool cross)
{
    for (double e1 : g.eta1)
        for (double e2 : g.eta2)
            for (double b1 : g.beta1)
                for (double b2 : g.beta2)
                    for (double z1 : g.z1)
                        for (double z2 : g.z2)
                            for (complex q : g.q)
                                for (const auto& ml : g.ml) {
                                    json p{{"eta1", e1}, {"eta2", e2}, {"beta1", b1}, {"beta2", b2},
                                           {"z1", z1},   {"z2", z2},   {"q", cx(q)},  {"ml", ml_json(ml)}};
                                    const OperatorSpec spec =
                                        cross ? cross_factor_spec(e1, e2, CrossFactor{b1, b2, z1, z2}, q, ml)
                                              : two_factor_spec(e1, e2, TwoFactor{b1, b2, z1, z2}, q, ml);
                                    operator_cases(b, spec, std::move(p), 1e-7);
                                }
}

inline void expand_affine(Builder& b, const Grid& g)
{
    for (const auto& [a1, a2] : g.affine_interval)
        for (const auto& [x, y] : g.affine_xy)
            for (double e1 : g.eta1)
                for (double e2 : g.eta2)
                    for (double e3 : g.eta3)
                        for (complex q : g.q)
                            for (const auto& ml : g.ml) {
                                json p{{"a1", a1},   {"a2", a2},   {"x", x},      {"y", y},
                                       {"eta1", e1}, {"eta2", e2}, {"eta3", e3}, {"q", cx(q)}, {"ml", ml_json(ml)}};
                                operator_cases(b, affine_power_spec(a1, a2, e1, e2, e3, AffinePower{x, y}, q, ml),
                                               std::move(p), e3 == 1.0 ? 1e-10 : 1e-7);
                            }
}

inline void expand_denominator(Builder& b, const Grid& g)
{
    for (const auto& [a1, a2] : g.denominator_interval)
        for (double e1 : g.eta1)
            for (double e2 : g.eta2)
                for (double xi : g.xi)
                    for (double sg : g.sigma)
                        for (complex q : g.q)
                            for (const auto& ml : g.ml) {
                                json p{{"check", "quad_vs_closed"}, {"a1", a1}, {"a2", a2}, {"eta1", e1}, {"eta2", e2},
                                       {"xi", xi},                  {"sigma", sg}, {"q", cx(q)}, {"ml", ml_json(ml)}};
                                operator_cases(
                                    b, weighted_denominator_spec(a1, a2, e1, e2, WeightedDenominator{xi, sg}, q, ml),
                                    std::move(p), 1e-8);
                            }
    // q = 0 collapse against both paths
    for (const char* path : {"closed", "quad"})
        for (const auto& [a1, a2] : g.denominator_interval)
            for (double e1 : g.eta1)
                for (double e2 : g.eta2)
                    for (double xi : g.xi)
                        for (double sg : g.sigma)
                            for (const auto& ml : g.ml) {
                                json p{{"check", std::string("collapse_") + path},
                                       {"a1", a1},
                                       {"a2", a2},
                                       {"eta1", e1},
                                       {"eta2", e2},
                                       {"xi", xi},
                                       {"sigma", sg},
                                       {"q", "0"},
                                       {"ml", ml_json(ml)}};
                                const auto spec =
                                    weighted_denominator_spec(a1, a2, e1, e2, WeightedDenominator{xi, sg}, 0.0, ml);
                                const bool quad = std::string(path) == "quad";
                                b.add(std::move(p), 1e-12, [spec] { spec.validate(); },
                                      [spec, quad] {
                                          const complex v = quad ? quad_operator(spec) : thm24_closed(spec);
                                          return std::pair{v, complex(thm24_q0_collapse(spec), 0.0)};
                                      });
                            }
}

inline void gen_case(Builder& b, const GenIntegralSpec& spec, json p, double tol)
{
    b.add(std::move(p), tol, [spec] { spec.validate(); },
          [spec] { return std::pair{gen_quad(spec), gen_series(spec)}; });
}

inline json gen_json(const GenIntegralSpec& s)
{
    return {{"gf", s.gf.name}, {"u", s.u},   {"m", s.m},     {"n", s.n},
            {"mu", s.mu},      {"nu", s.nu}, {"t", s.t},     {"q", cx(s.q)},
            {"ml", ml_json(s.ml)}};
}

inline void expand_general_gf(Builder& b, const Grid& g)
{
    const auto gf = gegenbauer_gf(g.alpha);
    for (const auto& [mu, nu] : g.mu_nu)
        for (double t : g.t)
            for (complex q : g.q)
                for (const auto& ml : g.ml) {
                    GenIntegralSpec s{g.gen_m, g.gen_n, mu, nu, t, g.general_u, q, ml, gf, {}};
                    gen_case(b, s, gen_json(s), 1e-7);
                }
}

inline void expand_corollary(Builder& b, const Grid& g)
{
    const auto gf = hypergeom_gf(g.c);
    const double m = g.corollary_m;
    for (double nu : g.corollary_nu)
        for (double t : g.t)
            for (complex q : g.q)
                for (const auto& ml : g.ml) {
                    GenIntegralSpec s{m, 2.0 * m, nu, nu, t, 1.0, q, ml, gf, {}};
                    b.add(gen_json(s), 1e-7, [s] { s.validate(); },
                          [s] { return std::pair{gen_quad(s), corollary_series(s.m, s.nu, s.t, s.u, s.q, s.ml, s.gf)}; });
                }
}

inline void expand_example(Builder& b, const Grid& g, std::size_t which)
{
    const GeneratingFunction gfs[] = {hypergeom_gf(g.c), humbert_gf(g.c, g.d), gegenbauer_gf(g.alpha)};
    const double us[] = {1.0, g.humbert_u, 1.0};
    for (const auto& [mu, nu] : g.mu_nu)
        for (double t : g.t)
            for (complex q : g.q)
                for (const auto& ml : g.ml) {
                    GenIntegralSpec s{g.gen_m, g.gen_n, mu, nu, t, us[which], q, ml, gfs[which], {}};
                    gen_case(b, s, gen_json(s), 1e-7);
                }
}

inline void expand_multi(Builder& b, const Grid& g)
{
    const MultiFactor k{g.multi_betas, g.multi_zs};
    for (double e1 : g.eta1)
        for (double e2 : g.eta2)
            for (complex q : g.q)
                for (const auto& ml : g.ml) {
                    json p{{"check", "quad_vs_series"}, {"eta1", e1}, {"eta2", e2}, {"betas", k.betas},
                           {"zs", k.zs},                {"q", cx(q)}, {"ml", ml_json(ml)}};
                    operator_cases(b, multi_factor_spec(e1, e2, k, q, ml), std::move(p), 1e-7);
                }
    // two factors reproduce the two-factor double series
    for (double e1 : g.eta1)
        for (double e2 : g.eta2)
            for (double b1 : g.beta1)
                for (double b2 : g.beta2)
                    for (double z1 : g.z1)
                        for (double z2 : g.z2)
                            for (complex q : g.q)
                                for (const auto& ml : g.ml) {
                                    json p{{"check", "two_factor_degeneration"},
                                           {"eta1", e1},
                                           {"eta2", e2},
                                           {"betas", {b1, b2}},
                                           {"zs", {z1, z2}},
                                           {"q", cx(q)},
                                           {"ml", ml_json(ml)}};
                                    const auto multi = multi_factor_spec(e1, e2, MultiFactor{{b1, b2}, {z1, z2}}, q, ml);
                                    const auto two = two_factor_spec(e1, e2, TwoFactor{b1, b2, z1, z2}, q, ml);
                                    b.add(std::move(p), 1e-12, [multi] { multi.validate(); },
                                          [multi, two] { return std::pair{thm41_series(multi), thm21_series(two)}; });
                                }
}

inline void expand_gen_multi(Builder& b, const Grid& g)
{
    std::vector<ExtraFactor> extra;
    for (std::size_t i = 0; i < g.gen_betas.size() && i < g.gen_zs.size(); ++i) extra.push_back({g.gen_betas[i], g.gen_zs[i]});
    const GeneratingFunction gfs[] = {hypergeom_gf(g.c), humbert_gf(g.c, g.d), gegenbauer_gf(g.alpha)};
    const double us[] = {1.0, g.humbert_u, 1.0};
    for (std::size_t which = 0; which < 3; ++which)
        for (const auto& [mu, nu] : g.mu_nu)
            for (double t : g.t)
                for (complex q : g.q)
                    for (const auto& ml : g.ml) {
                        GenIntegralSpec s{g.gen_m, g.gen_n, mu, nu, t, us[which], q, ml, gfs[which], extra};
                        json p = gen_json(s);
                        p["betas"] = g.gen_betas;
                        p["zs"] = g.gen_zs;
                        gen_case(b, s, std::move(p), 1e-7);
                    }
}

inline void reduction_cases(Builder& b, ReductionKind kind, double mu, double nu, const std::vector<double>& zs, double tol)
{
    if (zs.empty()) return;
    const double z_ref = zs.front();
    for (double z : zs) {
        json p{{"kind", to_string(kind)}, {"mu", mu}, {"nu", nu}, {"z", z}, {"z_ref", z_ref}};
        b.add(std::move(p), tol, [=] { (void)reduction_check(kind, mu, nu, {z}); },
              [=] {
                  const auto rep = reduction_check(kind, mu, nu, {z_ref, z});
                  // Bessel must hold exactly; the others only up to a constant.
                  const double ratio = kind == ReductionKind::bessel ? rep.points[1].ratio
                                                                      : rep.points[1].ratio / rep.points[0].ratio;
                  return std::pair{complex(ratio, 0.0), complex(1.0, 0.0)};
              });
    }
}

inline void expand_remark(Builder& b, const Grid& g)
{
    for (double lambda : g.remark_lambda)
        for (const char* path : {"quad", "series"}) {
            json p{{"lambda", lambda}, {"path", path}, {"eta1", g.remark_eta1}, {"eta2", g.remark_eta2},
                   {"beta1", g.remark_kernel.beta1}, {"beta2", g.remark_kernel.beta2},
                   {"z1", g.remark_kernel.z1}, {"z2", g.remark_kernel.z2}, {"q", cx(g.remark_q)}};
            const auto two_index = two_factor_spec(g.remark_eta1, g.remark_eta2, g.remark_kernel, g.remark_q,
                                                   MLParams{{lambda, 0.0}, {1.0, 1.0}});
            const auto one_index =
                two_factor_spec(g.remark_eta1, g.remark_eta2, g.remark_kernel, g.remark_q, MLParams{{lambda}, {1.0}});
            const bool quad = std::string(path) == "quad";
            b.add(std::move(p), 1e-12, [two_index] { two_index.validate(); },
                  [=] {
                      if (quad) return std::pair{quad_operator(two_index), quad_operator(one_index)};
                      return std::pair{series_operator(two_index), series_operator(one_index)};
                  });
        }
}

} // namespace detail

/// All cases of one identity, in lexicographic grid order.
inline std::vector<CaseTask> expand(TheoremId id, const Grid& g, std::optional<double> tol_override = {})
{
    std::vector<CaseTask> out;
    detail::Builder b(id, tol_override, out);
    switch (id) {
    case TheoremId::T2_1: detail::expand_two_factor(b, g, false); break;
    case TheoremId::T2_2: detail::expand_two_factor(b, g, true); break;
    case TheoremId::T2_3: detail::expand_affine(b, g); break;
    case TheoremId::T2_4: detail::expand_denominator(b, g); break;
    case TheoremId::T3_1: detail::expand_general_gf(b, g); break;
    case TheoremId::C3_2: detail::expand_corollary(b, g); break;
    case TheoremId::EX3_1: detail::expand_example(b, g, 0); break;
    case TheoremId::EX3_2: detail::expand_example(b, g, 1); break;
    case TheoremId::EX3_3: detail::expand_example(b, g, 2); break;
    case TheoremId::T4_1: detail::expand_multi(b, g); break;
    case TheoremId::T4_2: detail::expand_gen_multi(b, g); break;
    case TheoremId::RED1_6:
        for (double nu : g.bessel_nu) detail::reduction_cases(b, ReductionKind::bessel, 0.0, nu, g.reduction_z, 1e-10);
        break;
    case TheoremId::RED1_7:
        for (const auto& [mu, nu] : g.lommel_mu_nu)
            detail::reduction_cases(b, ReductionKind::lommel, mu, nu, g.reduction_z, 1e-9);
        break;
    case TheoremId::RED1_8:
        for (double nu : g.struve_nu) detail::reduction_cases(b, ReductionKind::struve, 0.0, nu, g.reduction_z, 1e-9);
        break;
    case TheoremId::REMARK: detail::expand_remark(b, g); break;
    }
    return out;
}

} // namespace mlbeta::verify
