#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace compgraph {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapability = 3;

// Runs the command line `args` (args[0] is the program name) and returns the
// exit code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compgraph
