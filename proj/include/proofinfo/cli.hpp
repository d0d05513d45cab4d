#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace proofinfo::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kDomainViolation = 2, kInputFailure = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proofinfo::cli
