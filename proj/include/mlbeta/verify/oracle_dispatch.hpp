#pragma once

///
/// \file oracle_dispatch.hpp
///
/// Uniform entry point to the brute-force oracles in oracles.hpp.
///
/// Flat parameter lists, in the order the arguments appear in the function:
///
///   F1    a, b1, b2, c, x, y
///   F3    a1, a2, b1, b2, c, x, y
///   Phi2  b1, b2, c, x, y
///   FD    a, b1..bn, c, z1..zn
///   2F1   a, b, c, x
///   1F1   a, c, x
///
/// ML takes (eps, omega, z) and Wright takes (upper, lower, z).
///

#include <mlbeta/error.hpp>
#include <mlbeta/mittag_leffler.hpp>
#include <mlbeta/oracles.hpp>
#include <mlbeta/wright.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mlbeta::verify {

enum class OracleKind { F1, F3, Phi2, FD, ML, Wright, F21, F11 };

inline OracleKind parse_oracle_kind(std::string_view s)
{
    if (s == "F1") return OracleKind::F1;
    if (s == "F3") return OracleKind::F3;
    if (s == "Phi2") return OracleKind::Phi2;
    if (s == "FD") return OracleKind::FD;
    if (s == "ML") return OracleKind::ML;
    if (s == "Wright") return OracleKind::Wright;
    if (s == "2F1") return OracleKind::F21;
    if (s == "1F1") return OracleKind::F11;
    throw ParameterError("unknown oracle kind '" + std::string(s) + "' (F1, F3, Phi2, FD, ML, Wright, 2F1, 1F1)");
}

struct OracleRequest {
    OracleKind kind = OracleKind::F1;
    std::vector<double> params;
    MLParams ml;
    WrightParams wright;
    complex z{};
    std::size_t cap = 0;
};

inline oracle::OracleValue oracle_double_sum(const OracleRequest& r)
{
    if (r.cap < 1) throw ParameterError("oracle: degree cap must be >= 1");
    const auto& p = r.params;
    auto need = [&](std::size_t n, const char* what) {
        if (p.size() != n) throw ParameterError(std::string("oracle ") + what + ": expected " + std::to_string(n) + " parameters");
    };
    switch (r.kind) {
    case OracleKind::F1: need(6, "F1"); return oracle::brute_f1(p[0], p[1], p[2], p[3], p[4], p[5], r.cap);
    case OracleKind::F3: need(7, "F3"); return oracle::brute_f3(p[0], p[1], p[2], p[3], p[4], p[5], p[6], r.cap);
    case OracleKind::Phi2: need(5, "Phi2"); return oracle::brute_phi2(p[0], p[1], p[2], p[3], p[4], r.cap);
    case OracleKind::FD: {
        if (p.size() < 4 || p.size() % 2 != 0) throw ParameterError("oracle FD: expected a, b1..bn, c, z1..zn");
        const std::size_t n = (p.size() - 2) / 2;
        const std::vector<double> b(p.begin() + 1, p.begin() + 1 + static_cast<std::ptrdiff_t>(n));
        const std::vector<double> z(p.begin() + 2 + static_cast<std::ptrdiff_t>(n), p.end());
        return oracle::brute_fd(p[0], b, p[1 + n], z, r.cap);
    }
    case OracleKind::F21: need(4, "2F1"); return oracle::brute_2f1(p[0], p[1], p[2], p[3], r.cap);
    case OracleKind::F11: need(3, "1F1"); return oracle::brute_1f1(p[0], p[1], p[2], r.cap);
    case OracleKind::ML:
        r.ml.validate();
        return oracle::brute_ml(r.ml.eps, r.ml.omega, r.z, r.cap);
    case OracleKind::Wright:
        r.wright.validate();
        return oracle::brute_wright(r.wright, r.z, r.cap);
    }
    throw ParameterError("oracle: unknown kind");
}

} // namespace mlbeta::verify
