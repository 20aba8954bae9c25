#ifndef RADPAIR_TOOLS_COMMANDS_HPP
#define RADPAIR_TOOLS_COMMANDS_HPP

// CLI subcommands. Each returns the process exit code:
// 0 success / all checks passed, 1 validation error, 2 limit-check failure.

#include "config.hpp"

namespace radpair::cli {

int cmd_operators(const RunConfig& config);
int cmd_simulate(const RunConfig& config);
int cmd_limits(const RunConfig& config);
int cmd_scan(const RunConfig& config);

} // namespace radpair::cli

#endif
