#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decisum::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNotFound = 1,
    kUsage = 2,
    kInvalidNumeric = 3,
};

/// Runs the command line front end; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace decisum::cli
