#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace basephi::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kGuardRefused = 3,
};

/// Largest tot_kappa(N) that `enumerate` will materialize.
inline constexpr unsigned long long kEnumerateLimit = 1'000'000;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace basephi::cli
