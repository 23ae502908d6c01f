#pragma once

#include <string>
#include <vector>

namespace myxo::cli {

/// Full command-line entry point: routes to the actin / graph / swarm engines
/// or replays a manifest. Returns the process exit code: 0 success, 1 usage
/// error, 2 runtime or I/O error.
int run_cli(const std::vector<std::string>& args);

} // namespace myxo::cli
