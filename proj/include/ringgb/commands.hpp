#ifndef RINGGB_COMMANDS_HPP
#define RINGGB_COMMANDS_HPP

#include <string>
#include <vector>

namespace ringgb {

// Exit codes: 0 success, 1 input problems (bad flags, unreadable file, parse
// errors), 2 domain errors (NotMonic, CapRequired, ...).
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

// args excludes the program name, e.g. {"gb", "--json", "file.gbp"}.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace ringgb

#endif
