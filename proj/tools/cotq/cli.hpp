#pragma once

#include <ostream>

namespace cotq::cli {

/// Exit codes of the command line front end.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs `cotq` with the given arguments, writing results to `out` and
/// diagnostics to `err`. Domain errors are reported as a JSON object on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace cotq::cli
