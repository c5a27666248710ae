#pragma once

#include <ostream>

#include "cqad/config.hpp"

namespace cqad {

enum ExitCode : int {
    kExitOk = 0,
    kExitIo = 1,
    kExitConfig = 2,
    kExitSolver = 3,
    kExitUncertified = 4,
};

// Runs the configured experiment, writing CSV to `out` and progress notes to
// `log`. Returns kExitOk or kExitUncertified; solver and config failures
// propagate as exceptions.
int run_experiment(const RunConfig& config, std::ostream& out, std::ostream& log);

} // namespace cqad
