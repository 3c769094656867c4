#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nsg::cli {

// Runs the command line given by args (program name excluded) writing to
// the given streams; returns the process exit code. Command output goes to
// out and is byte-identical across runs; diagnostics and timing go to err.
// Exit codes: 0 success, 1 reproduction-row failure, 2 invalid input,
// 3 enumeration cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace nsg::cli
