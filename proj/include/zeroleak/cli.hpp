#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zeroleak::cli {

enum ExitCode : int {
  ok = 0,
  domain_error = 1,
  resource_error = 2,
  oracle_failure = 3,
};

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// (or --out), structured errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeroleak::cli
