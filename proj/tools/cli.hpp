#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldraw::cli {

/// Exit statuses of the ldraw tool.
enum ExitCode : int { ok = 0, usage_error = 1, input_error = 2 };

/// Runs the command line `args` (args[0] is the program name). Regular output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ldraw::cli
