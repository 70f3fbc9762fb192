#pragma once

#include <mlbeta/beta_operator.hpp>
#include <mlbeta/error.hpp>
#include <mlbeta/mittag_leffler.hpp>
#include <mlbeta/numeric_kernel.hpp>

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mlbeta::verify {

enum class TheoremId {
    T2_1,
    T2_2,
    T2_3,
    T2_4,
    T3_1,
    C3_2,
    EX3_1,
    EX3_2,
    EX3_3,
    T4_1,
    T4_2,
    RED1_6,
    RED1_7,
    RED1_8,
    REMARK,
};

inline constexpr std::array all_theorems{
    TheoremId::T2_1,  TheoremId::T2_2,  TheoremId::T2_3, TheoremId::T2_4,   TheoremId::T3_1,
    TheoremId::C3_2,  TheoremId::EX3_1, TheoremId::EX3_2, TheoremId::EX3_3, TheoremId::T4_1,
    TheoremId::T4_2,  TheoremId::RED1_6, TheoremId::RED1_7, TheoremId::RED1_8, TheoremId::REMARK,
};

inline const char* to_string(TheoremId id)
{
    switch (id) {
    case TheoremId::T2_1: return "T2_1";
    case TheoremId::T2_2: return "T2_2";
    case TheoremId::T2_3: return "T2_3";
    case TheoremId::T2_4: return "T2_4";
    case TheoremId::T3_1: return "T3_1";
    case TheoremId::C3_2: return "C3_2";
    case TheoremId::EX3_1: return "EX3_1";
    case TheoremId::EX3_2: return "EX3_2";
    case TheoremId::EX3_3: return "EX3_3";
    case TheoremId::T4_1: return "T4_1";
    case TheoremId::T4_2: return "T4_2";
    case TheoremId::RED1_6: return "RED1_6";
    case TheoremId::RED1_7: return "RED1_7";
    case TheoremId::RED1_8: return "RED1_8";
    case TheoremId::REMARK: return "REMARK";
    }
    return "?";
}

/// Accepts the enum names (T2_1, EX3_2, ...) and the short forms 2.1 .. 2.4,
/// 3.1, 3.2 (the n = 2m corollary), 3 (all generating-function cases), 4.1,
/// 4.2, 4, 1.6 .. 1.8, reductions, remark and all.
inline std::vector<TheoremId> parse_suite_token(std::string_view tok)
{
    using T = TheoremId;
    if (tok == "all") return {all_theorems.begin(), all_theorems.end()};
    if (tok == "2.1") return {T::T2_1};
    if (tok == "2.2") return {T::T2_2};
    if (tok == "2.3") return {T::T2_3};
    if (tok == "2.4") return {T::T2_4};
    if (tok == "3.1") return {T::T3_1};
    if (tok == "3.2") return {T::C3_2};
    if (tok == "3") return {T::T3_1, T::C3_2, T::EX3_1, T::EX3_2, T::EX3_3};
    if (tok == "4.1") return {T::T4_1};
    if (tok == "4.2") return {T::T4_2};
    if (tok == "4") return {T::T4_1, T::T4_2};
    if (tok == "1.6") return {T::RED1_6};
    if (tok == "1.7") return {T::RED1_7};
    if (tok == "1.8") return {T::RED1_8};
    if (tok == "reductions") return {T::RED1_6, T::RED1_7, T::RED1_8};
    if (tok == "remark") return {T::REMARK};
    for (auto id : all_theorems)
        if (tok == to_string(id)) return {id};
    throw ParameterError("unknown suite '" + std::string(tok) + "'");
}

enum class Status { passed, failed, skipped };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::passed: return "passed";
    case Status::failed: return "failed";
    case Status::skipped: return "skipped";
    }
    return "?";
}

/// One evaluated instance of an identity.
struct IdentityCase {
    TheoremId theorem_id = TheoremId::T2_1;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    complex lhs{};
    complex rhs{};
    double rel_err = 0.0;
    double tol = 0.0;
    Status status = Status::skipped;
    /// Skip reason or evaluation error; empty on success.
    std::string error;
    double runtime_ms = 0.0;

    [[nodiscard]] bool passed() const { return status == Status::passed; }
};

/// |lhs - rhs| / (1 + |rhs|).
inline double relative_error(complex lhs, complex rhs) { return std::abs(lhs - rhs) / (1.0 + std::abs(rhs)); }

struct Tally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;

    [[nodiscard]] std::size_t total() const { return passed + failed + skipped; }
};

struct SweepReport {
    static constexpr int format_version = 1;

    std::vector<IdentityCase> cases;
    std::map<TheoremId, Tally> summary;
    std::optional<double> tol_override;
    SeriesControl series;

    [[nodiscard]] Tally totals() const
    {
        Tally t;
        for (const auto& [id, c] : summary) {
            t.passed += c.passed;
            t.failed += c.failed;
            t.skipped += c.skipped;
        }
        return t;
    }

    /// No failed case (skips allowed).
    [[nodiscard]] bool ok() const { return totals().failed == 0; }
};

/// Parameter grids for every identity. Defaults are small grids inside each
/// stated convergence region.
struct Grid {
    // Theorems 2.1 / 2.2 (and the shared eta, q, ml axes elsewhere)
    std::vector<double> eta1{0.6, 1.5};
    std::vector<double> eta2{0.6, 1.5};
    std::vector<double> beta1{0.5, 1.25};
    std::vector<double> beta2{0.5, 1.25};
    std::vector<double> z1{-0.4, 0.3};
    std::vector<double> z2{-0.4, 0.3};
    std::vector<complex> q{{-1.5, 0.0}, {0.8, 0.0}, {1.0, 1.0}};
    std::vector<MLParams> ml{
        {{0.5, 1.2}, {0.8, 1.7}},
        {{1.0, 0.6, 0.3}, {1.2, 0.9, 1.5}},
    };

    // affine-power kernel
    std::vector<std::pair<double, double>> affine_interval{{1.0, 3.0}};
    std::vector<std::pair<double, double>> affine_xy{{0.7, 2.0}};
    std::vector<double> eta3{1.0, 2.5};

    // weighted-denominator kernel
    std::vector<std::pair<double, double>> denominator_interval{{0.0, 2.0}};
    std::vector<double> xi{0.4};
    std::vector<double> sigma{-0.2, 0.5};

    // Generating-function integrals
    double gen_m = 0.8;
    double gen_n = 2.5;
    std::vector<std::pair<double, double>> mu_nu{{1.0, 0.5}, {2.0, 0.0}};
    std::vector<double> t{0.3};
    double c = 1.4;
    double d = 2.2;
    double alpha = 0.9;
    double humbert_u = 0.7;
    double general_u = 0.5;
    double corollary_m = 0.8;
    std::vector<double> corollary_nu{0.5};

    // Theorems 4.1 / 4.2
    std::vector<double> multi_betas{0.4, 0.7, 1.1};
    std::vector<double> multi_zs{0.2, -0.3, 0.25};
    std::vector<double> gen_betas{0.5, 1.25};
    std::vector<double> gen_zs{0.2, -0.3};

    // Reductions
    std::vector<double> reduction_z{0.5, 1.0, 2.0, 4.0};
    std::vector<double> bessel_nu{0.0, 0.5, 1.0, 2.5};
    std::vector<std::pair<double, double>> lommel_mu_nu{{0.5, 0.5}, {1.5, 0.25}, {2.0, 1.0}};
    std::vector<double> struve_nu{0.0, 0.5, 1.0, 2.5};

    // eps = (lambda, 0) degeneration, at one two-factor point
    std::vector<double> remark_lambda{0.5, 1.0, 2.0};
    double remark_eta1 = 0.6;
    double remark_eta2 = 1.5;
    TwoFactor remark_kernel{0.5, 1.25, 0.3, -0.4};
    complex remark_q{0.8, 0.0};
};

} // namespace mlbeta::verify
