#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2cat::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kValidation = 3, kMismatch = 4 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a shell-style command line (single and double quotes, no escapes).
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace sl2cat::cli
