#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kra::cli {

/// Exit codes of the `kra` tool.
enum ExitCode : int { Ok = 0, ParseFailure = 2, InvalidDiagram = 3, NegativeVerdict = 4, Usage = 64 };

/// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kra::cli
