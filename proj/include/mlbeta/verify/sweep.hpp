#pragma once

#include <mlbeta/text.hpp>
#include <mlbeta/verify/cases.hpp>
#include <mlbeta/verify/identity.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <exception>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

namespace mlbeta::verify {

struct SweepOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Runs one case: skip on a failed precondition check, fail on any
/// evaluation error or non-finite value.
inline IdentityCase run_case(const CaseTask& task)
{
    IdentityCase c;
    c.theorem_id = task.id;
    c.params = task.params;
    c.tol = task.tol;
    const auto start = std::chrono::steady_clock::now();
    try {
        task.check();
    } catch (const std::exception& e) {
        c.status = Status::skipped;
        c.error = e.what();
        return c;
    }
    try {
        const auto [lhs, rhs] = task.eval();
        c.lhs = lhs;
        c.rhs = rhs;
        c.rel_err = relative_error(lhs, rhs);
        if (!std::isfinite(c.rel_err)) {
            c.status = Status::failed;
            c.error = "non-finite value";
        } else {
            c.status = c.rel_err <= c.tol ? Status::passed : Status::failed;
        }
    } catch (const std::exception& e) {
        c.status = Status::failed;
        c.error = e.what();
    }
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
}

/// Evaluates every case of the selected identities. Case order follows the
/// suite order (duplicates removed) and then the grid order, independent of
/// the thread schedule.
inline SweepReport run_sweep(const std::vector<TheoremId>& suite, const Grid& grid = {},
                             std::optional<double> tol = {}, SweepOptions opts = {})
{
    std::vector<TheoremId> ids;
    for (auto id : suite)
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);

    std::vector<CaseTask> tasks;
    for (auto id : ids) {
        auto part = expand(id, grid, tol);
        tasks.insert(tasks.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }

    SweepReport rep;
    rep.tol_override = tol;
    rep.cases.resize(tasks.size());

    unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) rep.cases[i] = run_case(tasks[i]);
    };
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    }

    for (auto id : ids) rep.summary[id];
    for (const auto& c : rep.cases) {
        auto& t = rep.summary[c.theorem_id];
        switch (c.status) {
        case Status::passed: ++t.passed; break;
        case Status::failed: ++t.failed; break;
        case Status::skipped: ++t.skipped; break;
        }
    }
    return rep;
}

/// Parses "all" or a comma list of suite tokens.
inline std::vector<TheoremId> parse_suite(std::string_view s)
{
    std::vector<TheoremId> out;
    if (s.empty()) return out;
    for (auto tok : text::split(s, ',')) {
        const auto ids = parse_suite_token(tok);
        out.insert(out.end(), ids.begin(), ids.end());
    }
    return out;
}

} // namespace mlbeta::verify
