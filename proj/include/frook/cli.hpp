#pragma once

#include <string>
#include <vector>

namespace frook {

/// Entry point used by the binary and by the tests. Exit codes: 0 all checks
/// pass, 1 a check failed (or bad usage), 2 a scale guard was exceeded.
int run_cli(const std::vector<std::string>& args);

}  // namespace frook
