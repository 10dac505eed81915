#ifndef KKIT_TOOLS_CLI_HPP
#define KKIT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kkit::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2, kBudgetExceeded = 3 };

// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kkit::cli

#endif  // KKIT_TOOLS_CLI_HPP
