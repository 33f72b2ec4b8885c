#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace causalnet::cli {

enum ExitCode : int {
    ok = 0,
    mismatch = 1,
    parse_error = 2,
    validation_failure = 3,
    bound_exceeded = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace causalnet::cli
