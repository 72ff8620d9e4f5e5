#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trilie {

enum class ReportFormat { text, json };

struct DriverOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 20; // sample-count scale for verify-theorems
  bool timing = false;     // adds wall-clock milliseconds to the report
  ReportFormat format = ReportFormat::text;
};

/// Outcome of one subcommand run: the rendered report plus the process
/// exit code. 0 means every check in the report passed, 1 means some
/// check failed or a domain precondition was violated (the report then
/// carries an `error` object), 2 means the invocation itself was wrong
/// (unknown command or name, bad argument, malformed definition file).
struct RunResult {
  int exit_code = 0;
  std::string output; // rendered report, newline-terminated
};

/// Registered subcommand names in display order.
std::vector<std::string> command_names();

/// One-line `<args> -- description` usage string for a subcommand, or an
/// empty string for unknown names.
std::string command_usage(const std::string& command);

/// Runs one subcommand against an optional definition file. Reports are
/// deterministic: the same inputs, seed, and trials render byte-identical
/// output unless `timing` is on. verify-theorems is the only subcommand
/// that works without a definition.
RunResult run_command(const std::string& command,
                      const std::vector<std::string>& args,
                      const std::optional<std::string>& definition_text,
                      const DriverOptions& options);

} // namespace trilie
