#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "arcmodel/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    const arcmodel::CommandResult r = arcmodel::run_command(args, color);
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    return r.exit_code;
}
