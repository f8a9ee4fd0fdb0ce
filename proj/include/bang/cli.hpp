#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bang::cli {

// Runs the command line given as `args` (without the program name).
// Exit statuses: 0 success, 1 term/flag errors, 2 a check suite reported
// failures, 3 only inconclusive cases block a verdict.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace bang::cli
