#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

namespace unicrit {

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitResourceCap = 3 };

/// Runs one command line (args[0] is the program name). The emitted document
/// goes to `out`; help text and diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Aligned plain-text rendering of an output document.
std::string render_table(const nlohmann::json& doc);

}  // namespace unicrit
