// Mittag-Leffler and Wright values next to their elementary special cases.
#include <mlbeta/mlbeta.hpp>

#include <cmath>
#include <cstdio>

int main()
{
    using namespace mlbeta;

    std::printf("E_1(1)            = %.16g  (e = %.16g)\n", ml_classical(1.0, 1.0).real(), std::exp(1.0));
    std::printf("E_2(-4)           = %.16g  (cos 2 = %.16g)\n", ml_classical(2.0, -4.0).real(), std::cos(2.0));

    const MLParams two_index{{0.5, 1.2}, {0.8, 1.7}};
    const complex v = ml_multi(two_index, {2.5, 0.0});
    std::printf("E_(0.5,1.2),(0.8,1.7)(2.5) = %.16g\n", v.real());

    // 1Psi1[(1,1);(1,1); x] = e^x
    const WrightParams exp_like{{{1.0, 1.0}}, {{1.0, 1.0}}};
    std::printf("1Psi1(0.7)        = %.16g  (exp 0.7 = %.16g)\n", wright_eval(exp_like, 0.7).real(), std::exp(0.7));

    const auto rep = reduction_check(ReductionKind::bessel, 0.0, 0.5, {0.5, 1.0, 2.0, 4.0});
    for (const auto& pt : rep.points) std::printf("bessel nu=0.5 z=%-4g ratio %.15f\n", pt.z, pt.ratio);
}
