#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcalc {

/// Exit codes of the command-line front end.
enum ExitCode { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the qcalc command line; args excludes the program name. The environment variable QCALC_Q is read
/// unless env_q is given explicitly.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_q);

}  // namespace qcalc
