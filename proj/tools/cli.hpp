// cli.hpp
// Command-line front end. run_cli() does all the work so tests can drive it
// without spawning a process.

#pragma once

#include <string>
#include <vector>

namespace sigmakit::cli {

enum ExitCode : int {
    kOk = 0,
    kError = 1,
    kBudgetExceeded = 2,
    kUndecided = 3,
};

struct CliResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

/// args excludes the program name.
[[nodiscard]] CliResult run_cli(const std::vector<std::string>& args);

}  // namespace sigmakit::cli
