#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "contrastix/problem.hpp"

namespace contrastix::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitDefinitionError = 1,
    kExitUsage = 2,
    kExitTimeout = 3,
};

/// Runs one invocation. args[0] is the program name. Solutions go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reading of a solution in plain words.
std::string format_text(const Solution& sol, const Vocabulary& vocab);

}  // namespace contrastix::cli
