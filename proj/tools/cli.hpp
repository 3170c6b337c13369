#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace higherk::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kInputError = 2 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace higherk::cli
