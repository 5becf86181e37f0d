#ifndef QADSIM_CLI_COMMANDS_HPP
#define QADSIM_CLI_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qadsim::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitUsage = 2,
  kExitInconclusive = 3,
};

/// Entry point for the `qadsim` tool: subcommands check, oracle, spectrum,
/// evolve, decide, sample, sweep. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Thread count from QADSIM_THREADS (unset or invalid: 0, meaning default).
int threads_from_env();

}  // namespace qadsim::cli

#endif  // QADSIM_CLI_COMMANDS_HPP
