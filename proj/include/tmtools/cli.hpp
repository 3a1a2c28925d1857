#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmtools {

// Executes one command line (arguments only, no program name).
// Exit codes: 0 success / all checks passed, 1 a verification failed
// (first counterexample printed), 2 usage or evaluation-parameter error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tmtools
