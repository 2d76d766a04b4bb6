#pragma once

#include <string>
#include <vector>

namespace bandlim {

// Full command-line entry point, callable in-process for tests. `args` is
// argv[1..] in natural order. Returns the process exit code: 0 all verdicts
// pass, 1 a verdict or runtime failure, 2 bad usage or configuration.
int run_cli(const std::vector<std::string>& args);

} // namespace bandlim
