// The beta-type operator evaluated by quadrature and by its series for
// each kernel family.
#include <mlbeta/mlbeta.hpp>

#include <cstdio>

namespace {

void show(const char* label, const mlbeta::OperatorSpec& spec)
{
    const auto quad = mlbeta::quad_operator(spec);
    const auto series = mlbeta::series_operator(spec);
    std::printf("%-22s quad %-22.16g series %-22.16g |diff| %.2e\n", label, quad.real(), series.real(),
                std::abs(quad - series));
}

} // namespace

int main()
{
    using namespace mlbeta;
    const MLParams ml{{0.5, 1.2}, {0.8, 1.7}};

    show("two factor", two_factor_spec(0.6, 1.5, TwoFactor{0.5, 1.25, 0.3, -0.4}, 0.8, ml));
    show("cross factor", cross_factor_spec(0.6, 1.5, CrossFactor{0.5, 1.25, 0.3, -0.4}, 0.8, ml));
    show("affine power", affine_power_spec(1.0, 3.0, 0.8, 1.4, 2.5, AffinePower{0.7, 2.0}, -1.1, {{1.0, 0.6}, {1.2, 0.9}}));
    show("weighted denominator", weighted_denominator_spec(0.0, 2.0, 0.6, 1.5, WeightedDenominator{0.4, -0.2}, 1.3, ml));
    show("three factors", multi_factor_spec(0.9, 1.2, MultiFactor{{0.4, 0.7, 1.1}, {0.2, -0.3, 0.25}}, 0.6, ml));
}
