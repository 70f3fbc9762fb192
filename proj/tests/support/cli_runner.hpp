#pragma once

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testing_support {

struct CliRun {
    int code = -1;
    std::string out;
};

/// Runs the built CLI with `args`; stderr is merged into `out` when `merge` is set.
inline CliRun run_cli(const std::string& args, bool merge = false)
{
    const std::string cmd = std::string("\"") + MLBETA_CLI_PATH + "\" " + args + (merge ? " 2>&1" : " 2>/dev/null");
    CliRun r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace testing_support
