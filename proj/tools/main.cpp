#include <cstdio>
#include <string>
#include <vector>

#include "ringgb/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    ringgb::CommandResult res = ringgb::run_command(args);
    std::fputs(res.output.c_str(), res.exit_code == 0 ? stdout : stderr);
    return res.exit_code;
}
