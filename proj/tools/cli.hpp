#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace repgrowth::cli {

// Runs one command (args exclude the program name) writing results to out
// and diagnostics to err. Returns 0 on success, 1 on a verification failure
// (witness printed to out), 2 on malformed input (usage printed to err).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace repgrowth::cli
