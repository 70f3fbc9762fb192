#pragma once

///
/// \file report_io.hpp
///
/// JSON and CSV serialization of a SweepReport. Both carry the same per-case
/// columns; JSON additionally holds the summary and environment.
///

#include <mlbeta/text.hpp>
#include <mlbeta/verify/identity.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <string>

namespace mlbeta::verify {

namespace detail {

// NaN and infinities become null in JSON.
inline nlohmann::ordered_json number(double x)
{
    if (!std::isfinite(x)) return nullptr;
    return x;
}

inline std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

} // namespace detail

inline nlohmann::ordered_json to_json(const IdentityCase& c, bool with_runtime = true)
{
    using detail::number;
    nlohmann::ordered_json j;
    j["theorem_id"] = to_string(c.theorem_id);
    j["params"] = c.params;
    j["lhs_re"] = number(c.lhs.real());
    j["lhs_im"] = number(c.lhs.imag());
    j["rhs_re"] = number(c.rhs.real());
    j["rhs_im"] = number(c.rhs.imag());
    j["rel_err"] = number(c.rel_err);
    j["tol"] = c.tol;
    j["passed"] = c.passed();
    j["status"] = to_string(c.status);
    j["error"] = c.error;
    if (with_runtime) j["runtime_ms"] = c.runtime_ms;
    return j;
}

/// Full report. `with_runtime = false` drops the timing fields, leaving a
/// byte-stable document.
inline nlohmann::ordered_json to_json(const SweepReport& r, bool with_runtime = true)
{
    nlohmann::ordered_json j;
    j["format_version"] = SweepReport::format_version;
    nlohmann::ordered_json env;
    env["tol_override"] = r.tol_override ? nlohmann::ordered_json(*r.tol_override) : nlohmann::ordered_json(nullptr);
    env["series_rel_tol"] = r.series.rel_tol;
    env["series_max_terms"] = r.series.max_terms;
    env["series_quiet_terms"] = r.series.quiet_terms;
    env["inner_tightening"] = 100;
    j["environment"] = env;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [id, t] : r.summary)
        summary[to_string(id)] = {{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}, {"total", t.total()}};
    j["summary"] = summary;
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) cases.push_back(to_json(c, with_runtime));
    j["cases"] = cases;
    return j;
}

inline std::string to_csv(const SweepReport& r, bool with_runtime = true)
{
    std::ostringstream os;
    os << "theorem_id,params,lhs_re,lhs_im,rhs_re,rhs_im,rel_err,tol,passed,status,error";
    if (with_runtime) os << ",runtime_ms";
    os << '\n';
    auto num = [](double x) { return text::format_double(x); };
    for (const auto& c : r.cases) {
        os << to_string(c.theorem_id) << ',' << detail::csv_quote(c.params.dump()) << ',' << num(c.lhs.real()) << ','
           << num(c.lhs.imag()) << ',' << num(c.rhs.real()) << ',' << num(c.rhs.imag()) << ',' << num(c.rel_err) << ','
           << num(c.tol) << ',' << (c.passed() ? "true" : "false") << ',' << to_string(c.status) << ','
           << detail::csv_quote(c.error);
        if (with_runtime) os << ',' << num(c.runtime_ms);
        os << '\n';
    }
    return os.str();
}

} // namespace mlbeta::verify
