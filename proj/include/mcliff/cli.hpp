#pragma once

namespace mcliff::cli {

// Full command-line entry point: parses flags, dispatches the subcommand,
// writes the report, and maps failures to exit codes (0 success, 1 usage or
// parse problem, 2 degenerate or singular input, 3 identity-suite failure).
int run(int argc, const char* const* argv);

}  // namespace mcliff::cli
