#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace triadic::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitCapacity = 3,
  kExitMismatch = 4,
};

/// Options common to the subcommands; each command reads the ones it needs.
struct RunConfig {
  std::string dispersion = "sphere";  // sphere | channel | spec:<file>
  std::int64_t domain = 0;
  std::string input;   // solution file (JSON or CSV) instead of enumerating
  std::string out;     // file or directory, per command
  std::string format;  // json | csv | dot | text, per command
  unsigned jobs = 1;
  std::string radii;  // "50" | "100,200,300" | "100:1000:100"
  std::string shape;  // square | circle | "" for both
  std::int64_t oracle_cap = 100;
  std::string coefficients;  // CSV of triad,slot,value
  std::string multiplicity = "slot";  // slot | vector
};

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_topology(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_ode(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace triadic::cli
