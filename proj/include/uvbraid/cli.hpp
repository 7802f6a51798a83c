#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uvbraid {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 1, // verify-paper found a failing claim
  kExitDomainError = 2,
  kExitUnknownCommand = 64,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace uvbraid
