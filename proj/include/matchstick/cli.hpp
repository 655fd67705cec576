#pragma once

#include <iosfwd>

namespace matchstick::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kConstructionError = 3,
};

/// Entry point for the `matchstick` tool: build, solve, verify, sweep,
/// render and calibrate subcommands.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace matchstick::cli
