#ifndef BRACELAB_CLI_RUN_HPP_
#define BRACELAB_CLI_RUN_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bracelab::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_usage = 2,
  exit_resource_limit = 3,
};

// Runs one command line; `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bracelab::cli

#endif  // BRACELAB_CLI_RUN_HPP_
