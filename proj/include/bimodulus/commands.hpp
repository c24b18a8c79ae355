#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bimodulus {

enum ExitCode : int { kExitPass = 0, kExitInput = 2, kExitInternal = 3 };

/// argv without the program name, e.g. {"hochschild", "--d", "2"}.
/// Writes the JSON report to `out` (or --out) and diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bimodulus
