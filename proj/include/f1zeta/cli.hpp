#pragma once

#include "f1zeta/loose_graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace f1zeta {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitVerifyFailed = 3 };

/// Resolves an input argument: "-" reads `in`, "@family:a,b" builds a
/// generator family, anything else is a file path.
LooseGraph load_input(const std::string& source, std::istream& in, bool strict);

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace f1zeta
