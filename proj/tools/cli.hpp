#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locc::cli {

enum ExitCode : int {
    exit_definite = 0,
    exit_input_error = 2,
    exit_unknown = 3,
    exit_inconsistency = 4,
};

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& bytes);

} // namespace locc::cli
