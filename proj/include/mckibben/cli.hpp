#pragma once

// The `mckibben` command line: resolve, force, compare, sweep, energy.
//
// Exit codes: 0 success, 1 verification or consistency failure,
// 2 usage or domain error.

#include <iosfwd>
#include <span>
#include <string>

#include "mckibben/config.hpp"
#include "mckibben/report.hpp"

namespace mckibben::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

CommandResult cmd_resolve(const RunConfig& config);
CommandResult cmd_force(const RunConfig& config);
CommandResult cmd_compare(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config);
CommandResult cmd_energy(const RunConfig& config);

std::string render(const Report& report, OutputFormat format);

// Parses `args` (without the program name), runs the subcommand and writes
// the rendered report to `out` or to the configured output file.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mckibben::cli
