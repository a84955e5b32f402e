#pragma once

#include <string>
#include <vector>

namespace arcmodel {

struct CommandResult {
    int exit_code = 0; ///< 0 success/pass, 1 check failed, 2 usage or input error
    std::string out;
    std::string err;
};

/// Runs one CLI invocation in-process. args excludes the program name.
/// Output is buffered in the result; nothing is written to the terminal.
CommandResult run_command(const std::vector<std::string>& args, bool color = false);

} // namespace arcmodel
