#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtdom {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitDomain = 3 };

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtdom
