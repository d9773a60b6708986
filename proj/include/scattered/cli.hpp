#ifndef SCATTERED_CLI_HPP
#define SCATTERED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace scattered {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitResourceLimit = 3,
};

/// Entry point of the `scatter` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace scattered

#endif  // SCATTERED_CLI_HPP
