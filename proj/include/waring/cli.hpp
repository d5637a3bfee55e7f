#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace waring {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 when a verdict or result was produced, 1 on internal failure, 2 on input
/// error or unknown subcommand.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waring
