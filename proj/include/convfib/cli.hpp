#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace convfib::cli {

/// Exit status: 0 success, 1 verification failure, 2 usage error.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convfib::cli
