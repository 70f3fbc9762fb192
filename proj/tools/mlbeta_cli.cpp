// mlbeta command-line front end.
//
//   mlbeta eval ml|wright|op|hyp ...
//   mlbeta verify --suite all --tol 1e-7 --out report.json --format json
//   mlbeta oracle --kind F1 --params 1.2,0.5,0.9,2.7,0.3,-0.4 --cap 120
//
// Exit codes: 0 success, 1 verification or numerical failure, 2 bad arguments.

#include <mlbeta/mlbeta.hpp>
#include <mlbeta/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using mlbeta::complex;
namespace text = mlbeta::text;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

/// String-valued options, parsed later with the locale-independent helpers.
class Flags {
public:
    explicit Flags(CLI::App* app) : app_(app) {}

    void add(const std::string& name, const std::string& help, std::string fallback = {})
    {
        values_[name] = std::move(fallback);
        app_->add_option("--" + name, values_[name], help);
    }

    [[nodiscard]] bool given(const std::string& name) const { return app_->count("--" + name) > 0; }
    [[nodiscard]] const std::string& str(const std::string& name) const { return values_.at(name); }
    [[nodiscard]] double num(const std::string& name) const { return text::parse_double(str(name)); }
    [[nodiscard]] complex cx(const std::string& name) const { return text::parse_complex(str(name)); }
    [[nodiscard]] std::vector<double> list(const std::string& name) const { return text::parse_list(str(name)); }

private:
    CLI::App* app_;
    std::map<std::string, std::string> values_;
};

std::string output_format = "plain";

void print_value(complex v)
{
    if (output_format == "json") {
        nlohmann::ordered_json j{{"value_re", v.real()}, {"value_im", v.imag()}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << text::format_complex(v) << '\n';
    }
}

mlbeta::MLParams ml_from(const Flags& f) { return {f.list("eps"), f.list("omega")}; }

void add_ml_flags(Flags& f)
{
    f.add("eps", "Mittag-Leffler eps list", "0.5,1.2");
    f.add("omega", "Mittag-Leffler omega list", "0.8,1.7");
}

// Two-element list from --<name> or from --<name>1 / --<name>2.
std::vector<double> pair_list(const Flags& f, const std::string& name)
{
    std::vector<double> v = f.list(name);
    if (f.given(name + "1") || f.given(name + "2")) {
        if (v.size() < 2) v.resize(2, 0.0);
        if (f.given(name + "1")) v[0] = f.num(name + "1");
        if (f.given(name + "2")) v[1] = f.num(name + "2");
    }
    return v;
}

mlbeta::GeneratingFunction gf_from(const Flags& f)
{
    const auto& name = f.str("gf");
    if (name == "hypergeom") return mlbeta::hypergeom_gf(f.num("c"));
    if (name == "humbert") return mlbeta::humbert_gf(f.num("c"), f.num("d"));
    if (name == "gegenbauer") return mlbeta::gegenbauer_gf(f.num("alpha"));
    throw mlbeta::ParameterError("unknown generating function '" + name + "' (hypergeom, humbert, gegenbauer)");
}

complex eval_op(const Flags& f)
{
    const std::string theorem = f.str("theorem");
    const std::string path = f.str("path");
    if (path != "quad" && path != "series") throw mlbeta::ParameterError("--path must be quad or series");
    const bool quad = path == "quad";
    const complex q = f.cx("q");
    const auto ml = ml_from(f);

    if (theorem == "3.1" || theorem == "4.2") {
        mlbeta::GenIntegralSpec s{f.num("m"), f.num("n"), f.num("mu"), f.num("nu"), f.num("t"), f.num("u"), q, ml,
                                  gf_from(f), {}};
        if (theorem == "4.2") {
            const auto b = f.list("beta"), z = f.list("z");
            if (b.size() != z.size()) throw mlbeta::ParameterError("--beta and --z need equal lengths");
            for (std::size_t i = 0; i < b.size(); ++i) s.extra.push_back({b[i], z[i]});
        }
        return quad ? mlbeta::gen_quad(s) : mlbeta::gen_series(s);
    }

    mlbeta::OperatorSpec spec;
    const double eta1 = f.num("eta1"), eta2 = f.num("eta2");
    if (theorem == "2.1" || theorem == "2.2") {
        const auto b = pair_list(f, "beta"), z = pair_list(f, "z");
        if (b.size() != 2 || z.size() != 2) throw mlbeta::ParameterError("theorem " + theorem + " needs two betas and two zs");
        spec = theorem == "2.1" ? mlbeta::two_factor_spec(eta1, eta2, mlbeta::TwoFactor{b[0], b[1], z[0], z[1]}, q, ml)
                                : mlbeta::cross_factor_spec(eta1, eta2, mlbeta::CrossFactor{b[0], b[1], z[0], z[1]}, q, ml);
    } else if (theorem == "2.3") {
        spec = mlbeta::affine_power_spec(f.num("a1"), f.num("a2"), eta1, eta2, f.num("eta3"),
                                         mlbeta::AffinePower{f.num("x"), f.num("y")}, q, ml);
    } else if (theorem == "2.4") {
        spec = mlbeta::weighted_denominator_spec(f.num("a1"), f.num("a2"), eta1, eta2,
                                                 mlbeta::WeightedDenominator{f.num("xi"), f.num("sigma")}, q, ml);
    } else if (theorem == "4.1") {
        spec = mlbeta::multi_factor_spec(eta1, eta2, mlbeta::MultiFactor{f.list("beta"), f.list("z")}, q, ml);
    } else {
        throw mlbeta::ParameterError("--theorem must be one of 2.1, 2.2, 2.3, 2.4, 3.1, 4.1, 4.2");
    }
    return quad ? mlbeta::quad_operator(spec) : mlbeta::series_operator(spec);
}

complex eval_hyp(const Flags& f)
{
    const auto& fn = f.str("fn");
    const auto p = f.list("params");
    auto need = [&](std::size_t n) {
        if (p.size() != n) throw mlbeta::ParameterError(fn + " expects " + std::to_string(n) + " parameters");
    };
    if (fn == "2F1") return need(4), mlbeta::gauss_2f1(p[0], p[1], p[2], p[3]);
    if (fn == "1F1") return need(3), mlbeta::kummer_1f1(p[0], p[1], p[2]);
    if (fn == "F1") return need(6), mlbeta::appell_f1(p[0], p[1], p[2], p[3], p[4], p[5]);
    if (fn == "F3") return need(7), mlbeta::appell_f3(p[0], p[1], p[2], p[3], p[4], p[5], p[6]);
    if (fn == "Phi2") return need(5), mlbeta::humbert_phi2(p[0], p[1], p[2], p[3], p[4]);
    if (fn == "gegenbauer") {
        need(3);
        if (!(p[0] >= 0.0) || p[0] != static_cast<double>(static_cast<std::size_t>(p[0])))
            throw mlbeta::ParameterError("gegenbauer degree must be a nonnegative integer");
        return mlbeta::gegenbauer(static_cast<std::size_t>(p[0]), p[1], p[2]);
    }
    if (fn == "FD") {
        if (p.size() < 4 || p.size() % 2 != 0) throw mlbeta::ParameterError("FD expects a, b1..bn, c, z1..zn");
        const std::size_t n = (p.size() - 2) / 2;
        const std::vector<double> b(p.begin() + 1, p.begin() + 1 + static_cast<std::ptrdiff_t>(n));
        const std::vector<double> z(p.begin() + 2 + static_cast<std::ptrdiff_t>(n), p.end());
        return mlbeta::lauricella_fd(p[0], b, p[1 + n], z);
    }
    throw mlbeta::ParameterError("--fn must be one of 2F1, 1F1, F1, F3, FD, Phi2, gegenbauer");
}

int run_verify(const Flags& f, unsigned threads)
{
    namespace v = mlbeta::verify;
    const auto suite = v::parse_suite(f.str("suite"));
    std::optional<double> tol;
    if (f.given("tol")) tol = f.num("tol");
    const auto& format = f.str("format");
    if (format != "json" && format != "csv" && format != "plain")
        throw mlbeta::ParameterError("--format must be json, csv or plain");

    const auto rep = v::run_sweep(suite, {}, tol, {threads});

    std::string doc;
    if (format == "json") doc = v::to_json(rep).dump(2) + '\n';
    if (format == "csv") doc = v::to_csv(rep);
    std::ostringstream summary;
    for (const auto& [id, t] : rep.summary)
        summary << v::to_string(id) << ": " << t.passed << " passed, " << t.failed << " failed, " << t.skipped
                << " skipped\n";
    for (const auto& c : rep.cases)
        if (c.status == v::Status::failed)
            summary << "FAILED " << v::to_string(c.theorem_id) << ' ' << c.params.dump() << " rel_err "
                    << text::format_double(c.rel_err) << (c.error.empty() ? "" : " (" + c.error + ")") << '\n';

    if (f.given("out")) {
        if (format == "plain") doc = summary.str();
        std::ofstream out(f.str("out"), std::ios::binary);
        if (!out) throw mlbeta::ParameterError("cannot open " + f.str("out") + " for writing");
        out << doc;
        std::cout << summary.str();
    } else {
        std::cout << (format == "plain" ? summary.str() : doc);
    }
    return rep.ok() ? exit_ok : exit_failure;
}

int run_oracle(const Flags& f)
{
    namespace v = mlbeta::verify;
    v::OracleRequest r;
    r.kind = v::parse_oracle_kind(f.str("kind"));
    const double cap = f.num("cap");
    if (!(cap >= 1.0) || cap != static_cast<double>(static_cast<std::size_t>(cap)))
        throw mlbeta::ParameterError("--cap must be a positive integer");
    r.cap = static_cast<std::size_t>(cap);
    r.params = f.list("params");
    r.ml = {f.list("eps"), f.list("omega")};
    r.wright = {text::parse_pairs(f.str("upper")), text::parse_pairs(f.str("lower"))};
    r.z = f.cx("z");
    const auto val = v::oracle_double_sum(r);
    if (val.cap_warning) std::cerr << "warning: last degree block exceeds 1e-15 of the sum; raise --cap\n";
    print_value(val.value);
    return exit_ok;
}

/// Reads flat key=value lines and turns them into "--key value" tokens.
std::vector<std::string> config_tokens(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw mlbeta::ParameterError("cannot read config file " + path);
    std::vector<std::string> out;
    std::string line;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw mlbeta::ParameterError(path + ":" + std::to_string(lineno) + ": expected key=value");
        out.push_back("--" + trim(line.substr(0, eq)));
        out.push_back(trim(line.substr(eq + 1)));
    }
    return out;
}

/// Splices config-file flags in front of the first option, so explicit
/// flags come later and win under the take-last policy.
std::vector<std::string> expand_config(std::vector<std::string> args)
{
    for (std::size_t i = 1; i < args.size(); ++i) {
        std::string file;
        std::size_t span = 0;
        if (args[i] == "--config" && i + 1 < args.size()) {
            file = args[i + 1];
            span = 2;
        } else if (args[i].rfind("--config=", 0) == 0) {
            file = args[i].substr(9);
            span = 1;
        } else {
            continue;
        }
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + span));
        std::size_t first_opt = 1;
        while (first_opt < args.size() && args[first_opt].rfind("-", 0) != 0) ++first_opt;
        const auto extra = config_tokens(file);
        args.insert(args.begin() + static_cast<std::ptrdiff_t>(first_opt), extra.begin(), extra.end());
        return args;
    }
    return args;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multi-index Mittag-Leffler functions, Wright functions and beta-type integral operators"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.add_option("--config", "flat key=value file; explicit flags win");

    auto* eval = app.add_subcommand("eval", "evaluate a function or operator");
    eval->require_subcommand(1);

    auto* ml_cmd = eval->add_subcommand("ml", "multi-index Mittag-Leffler function");
    Flags ml_flags(ml_cmd);
    add_ml_flags(ml_flags);
    ml_flags.add("z", "argument (complex a+bi)", "0");

    auto* wr_cmd = eval->add_subcommand("wright", "generalized Wright function");
    Flags wr_flags(wr_cmd);
    wr_flags.add("upper", "numerator pairs value:weight,...");
    wr_flags.add("lower", "denominator pairs value:weight,...");
    wr_flags.add("x", "argument (complex a+bi)", "0");

    auto* op_cmd = eval->add_subcommand("op", "beta-type operator or generating-function integral");
    Flags op(op_cmd);
    op.add("theorem", "2.1, 2.2, 2.3, 2.4, 4.1 (operator) or 3.1, 4.2 (generating function)", "2.1");
    op.add("path", "quad or series", "series");
    add_ml_flags(op);
    op.add("q", "Mittag-Leffler scale (complex)", "0.8");
    op.add("eta1", "first beta exponent", "0.6");
    op.add("eta2", "second beta exponent", "1.5");
    op.add("eta3", "kernel power (--theorem 2.3)", "1");
    op.add("a1", "interval start (--theorem 2.3, 2.4)", "0");
    op.add("a2", "interval end (--theorem 2.3, 2.4)", "1");
    op.add("beta", "factor exponents list", "0.5,1.25");
    op.add("z", "factor arguments list, each |z| < 1", "0.3,-0.4");
    op.add("beta1", "first factor exponent");
    op.add("beta2", "second factor exponent");
    op.add("z1", "first factor argument");
    op.add("z2", "second factor argument");
    op.add("x", "affine slope (--theorem 2.3)", "0.7");
    op.add("y", "affine intercept (--theorem 2.3)", "2");
    op.add("xi", "denominator weight at a2 (--theorem 2.4)", "0.4");
    op.add("sigma", "denominator weight at a1 (--theorem 2.4)", "-0.2");
    op.add("m", "generating-function integral: first exponent", "0.8");
    op.add("n", "generating-function integral: total exponent", "2.5");
    op.add("mu", "power of y inside G", "1");
    op.add("nu", "power of 1-y inside G", "0.5");
    op.add("t", "second argument scale of G", "0.3");
    op.add("u", "first argument of G", "1");
    op.add("gf", "hypergeom, humbert or gegenbauer", "hypergeom");
    op.add("c", "hypergeom / humbert parameter", "1.4");
    op.add("d", "humbert parameter", "2.2");
    op.add("alpha", "gegenbauer parameter", "0.9");

    auto* hyp_cmd = eval->add_subcommand("hyp", "classical hypergeometric functions");
    Flags hyp(hyp_cmd);
    hyp.add("fn", "2F1, 1F1, F1, F3, FD, Phi2 or gegenbauer");
    hyp.add("params", "parameters in signature order");
    hyp_cmd->get_option("--fn")->required();

    for (auto* sub : {ml_cmd, wr_cmd, op_cmd, hyp_cmd})
        sub->add_option("--format", output_format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    auto* ver_cmd = app.add_subcommand("verify", "run identity verification sweeps");
    Flags ver(ver_cmd);
    ver.add("suite", "all or a comma list: 2.1,2.2,2.3,2.4,3.1,3.2,3,4.1,4.2,4,1.6,1.7,1.8,remark, or ids like EX3_1", "all");
    ver.add("tol", "override every per-case tolerance");
    ver.add("out", "write the report to this file");
    ver.add("format", "json, csv or plain", "plain");
    unsigned threads = 0;
    ver_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* orc_cmd = app.add_subcommand("oracle", "brute-force reference sums");
    Flags orc(orc_cmd);
    orc.add("kind", "F1, F3, Phi2, FD, ML, Wright, 2F1 or 1F1");
    orc.add("params", "flat parameter list for F1, F3, Phi2, FD, 2F1, 1F1");
    orc.add("eps", "ML eps list");
    orc.add("omega", "ML omega list");
    orc.add("upper", "Wright numerator pairs");
    orc.add("lower", "Wright denominator pairs");
    orc.add("z", "ML / Wright argument (complex)", "0");
    orc.add("cap", "degree cap", "200");
    orc_cmd->get_option("--kind")->required();

    try {
        std::vector<std::string> args(argv, argv + argc);
        args = expand_config(std::move(args));
        std::vector<const char*> cargs;
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const mlbeta::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*ml_cmd) print_value(mlbeta::ml_multi(ml_from(ml_flags), ml_flags.cx("z")));
        if (*wr_cmd)
            print_value(mlbeta::wright_eval(
                {text::parse_pairs(wr_flags.str("upper")), text::parse_pairs(wr_flags.str("lower"))}, wr_flags.cx("x")));
        if (*op_cmd) print_value(eval_op(op));
        if (*hyp_cmd) print_value(eval_hyp(hyp));
        if (*ver_cmd) return run_verify(ver, threads);
        if (*orc_cmd) return run_oracle(orc);
    } catch (const mlbeta::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const mlbeta::Error& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
