#ifndef BSG_CLI_HPP
#define BSG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bsg::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kInvalid = 2, kUsage = 3 };

// Runs one bsg subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsg::cli

#endif  // BSG_CLI_HPP
