#pragma once

///
/// \file text.hpp
///
/// Locale-independent number parsing and shortest round-trip formatting,
/// complex literals of the form a+bi / a-bi / bi, comma lists and Wright
/// value:weight pairs.
///

#include <mlbeta/error.hpp>
#include <mlbeta/numeric_kernel.hpp>
#include <mlbeta/wright.hpp>

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace mlbeta::text {

/// Shortest representation that round-trips, e.g. 2.718281828459045.
inline std::string format_double(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) x = 0.0; // drop the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

/// "a" when the imaginary part is zero, otherwise "a+bi" / "a-bi".
inline std::string format_complex(complex z)
{
    if (z.imag() == 0.0) return format_double(z.real());
    std::string s = format_double(z.real());
    if (!(z.imag() < 0.0)) s += '+';
    return s + format_double(z.imag()) + 'i';
}

inline double parse_double(std::string_view s)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double x = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ParameterError("not a number: '" + std::string(s) + "'");
    return x;
}

/// Parses "1.5", "-2i", "1+1i", "0.3-2.5e-3i", "i".
inline complex parse_complex(std::string_view s)
{
    if (s.empty()) throw ParameterError("empty complex literal");
    if (s.back() != 'i') return {parse_double(s), 0.0};
    s.remove_suffix(1);
    // The split is the last sign that is not the leading one and not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_part = [](std::string_view t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double(t);
    };
    if (split == std::string_view::npos) return {0.0, imag_part(s)};
    return {parse_double(s.substr(0, split)), imag_part(s.substr(split))};
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::vector<double> parse_list(std::string_view s)
{
    std::vector<double> out;
    if (s.empty()) return out;
    for (auto item : split(s, ',')) out.push_back(parse_double(item));
    return out;
}

/// "1.3:1,0.7:1" -> {(1.3,1), (0.7,1)}.
inline std::vector<WrightPair> parse_pairs(std::string_view s)
{
    std::vector<WrightPair> out;
    if (s.empty()) return out;
    for (auto item : split(s, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) throw ParameterError("expected value:weight, got '" + std::string(item) + "'");
        out.push_back({parse_double(parts[0]), parse_double(parts[1])});
    }
    return out;
}

inline std::string format_list(const std::vector<double>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_double(v[i]);
    }
    return s;
}

} // namespace mlbeta::text
