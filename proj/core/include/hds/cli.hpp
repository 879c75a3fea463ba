#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hds {

/// Exit codes shared by every subcommand that answers a question.
enum ExitCode : int {
    kExitYes = 0,
    kExitNo = 1,
    kExitUsage = 2,
    kExitUnknown = 3,
};

/// Runs the workbench command line. `args` excludes the program name. The
/// result document goes to `out`, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hds
