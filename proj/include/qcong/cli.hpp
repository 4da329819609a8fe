#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcong::cli {

// Runs one CLI invocation (argv without the program name) writing to the given
// streams. Exit status: 0 success, 2 precondition/hypothesis/precision
// failures, 1 internal errors. Output is built in full, then emitted once, so
// repeated runs are byte-identical.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

int run(int argc, char** argv);

} // namespace qcong::cli
