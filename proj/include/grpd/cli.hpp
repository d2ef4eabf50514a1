#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grpd {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFails = 1,
  kExitInvalidInput = 2,
  kExitTooLarge = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits on commas outside (), {} and [].
std::vector<std::string> split_members(const std::string& s);

}  // namespace grpd
