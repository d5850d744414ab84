#ifndef LEFSCHETZ_TOOLS_CLI_HPP
#define LEFSCHETZ_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lefschetz::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int
{
    kPass = 0,
    kFail = 1,
    kUsageError = 2,
    kInconclusive = 3,
};

/**
 * Run one command. `args` excludes the program name. A single JSON document
 * goes to `out`, a one-line human summary (or diagnostic) to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace lefschetz::cli

#endif
