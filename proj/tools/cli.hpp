#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pbs::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kValidation = 3,
  kInternal = 4,
};

/// Entry point behind the `pbs` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbs::cli
