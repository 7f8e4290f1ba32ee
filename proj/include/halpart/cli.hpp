#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halpart::cli {

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_no_selection = 1, // Hall violation, contradiction, or unsolvable grid
    exit_bad_input = 2,
    exit_size_limit = 3,
};

/// Runs one command line. `args` excludes the program name. Input is read
/// from `--input FILE` when given, otherwise from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace halpart::cli
