// Beta integrals against the built-in generating functions.
#include <mlbeta/mlbeta.hpp>

#include <cstdio>

int main()
{
    using namespace mlbeta;
    const MLParams ml{{0.5, 1.2}, {0.8, 1.7}};

    for (const auto& ex : example_instances()) {
        for (const auto& [mu, nu] : ex.mu_nu) {
            const auto spec = ex.spec(mu, nu, ex.t_values.front(), 0.9, ml);
            std::printf("%s mu=%g nu=%g  quad %.16g  series %.16g\n", ex.gf.name.c_str(), mu, nu, gen_quad(spec).real(),
                        gen_series(spec).real());
        }
    }

    // with two extra factors (1 - z y)^{-beta}
    GenIntegralSpec spec{0.8, 2.5, 1.0, 0.5, 0.3, 1.0, 0.8, ml, hypergeom_gf(1.4), {{0.5, 0.2}, {1.25, -0.3}}};
    std::printf("extra factors        quad %.16g  series %.16g\n", gen_quad(spec).real(), gen_series(spec).real());
}
