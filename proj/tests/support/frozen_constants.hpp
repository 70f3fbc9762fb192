#pragma once

// Reference values computed independently with mpmath at 40 significant
// digits by tests/oracles/derive_constants.py, rounded to 20 digits.

namespace frozen {

// 3Psi3[(1.3,1),(0.7,1),(1,1); (0.8,0.5),(1.7,1.2),(2,2); 1.5+0.5i]
inline constexpr double wright_3psi3_re = 1.2741125497558559536;
inline constexpr double wright_3psi3_im = 0.06259044225973966046;
// 3Psi3[(0.6,1),(1.5,1),(1,1); (0.8,0.5),(1.7,1.2),(2.1,2); 0.8]
inline constexpr double wright_two_factor_point = 1.2806496224344803976;

// E_{(0.5,1.2),(0.8,1.7)}(2.5)
inline constexpr double ml_two_index = 3.9022384953075669297;
// E_{0.7}(-1.2)
inline constexpr double ml_classical = 0.34575789081981142539;
// E_{0.5,1.5}(2)
inline constexpr double wiman = 53.970452194988986206;

inline constexpr double gauss_2f1 = 0.89378432121468032682;     // 2F1(0.3,1.7;2.2;-0.6)
inline constexpr double kummer_1f1 = 0.69260569668354584705;    // 1F1(0.8;2.5;-1.3)
inline constexpr double appell_f1 = 0.93271828342905181231;     // F1(1.2;0.5,0.9;2.7;0.3,-0.4)
inline constexpr double appell_f3 = 1.2177571966217641001;      // F3(1.1,0.6;0.8,1.4;2.9;0.25,0.35)
inline constexpr double lauricella_fd = 1.0546900727749063325;  // FD(0.9;0.4,0.7,1.1;3.1;0.2,-0.3,0.25)
inline constexpr double humbert_phi2 = 1.3185551809553094194;   // Phi2(0.7,0.7;1.9;1.2,-0.8)

// Operator integrals by adaptive quadrature, ml eps=(0.5,1.2) omega=(0.8,1.7) unless noted.
inline constexpr double two_factor = 0.93423250134592621323;     // eta (0.6,1.5), beta (0.5,1.25), z (0.3,-0.4), q 0.8
inline constexpr double cross_factor = 0.79242360217355103295;   // same point, cross kernel
inline constexpr double affine_power = 20.539337053504521013;    // (1,3,0.7,2,0.8,1.4,2.5,-1.1), eps (1,0.6) omega (1.2,0.9)
inline constexpr double weighted_denominator = 0.59898813264239382577; // eta (0.6,1.5), xi 0.4, sigma -0.2, [0,2], q 1.3
inline constexpr double multi_factor = 1.0964112344160736992;    // beta (0.4,0.7,1.1), z (0.2,-0.3,0.25), eta (0.9,1.2), q 0.6

// Generating-function integrals, (m,n,mu,nu) = (0.8,2.5,1,0.5), q 0.9
inline constexpr double gen_hypergeom = 0.92456639765302297616;  // c 1.4, t 0.35
inline constexpr double gen_gegenbauer = 0.93480798290001387327; // alpha 0.9, u 1, t 0.3
inline constexpr double gen_humbert = 1.3567429356603263404;     // c 1.4, d 2.2, u 0.7, t 0.3

} // namespace frozen
