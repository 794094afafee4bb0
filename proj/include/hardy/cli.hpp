#pragma once

#include "hardy/experiment.hpp"
#include "hardy/optimize.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hardy::cli {

enum class Command { Simulate, Hardy, Lhv, Sweep, Optimize };
enum class OutputFormat { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndefined = 3;

struct RunConfig {
  Command command = Command::Hardy;
  /// Radians; `--degrees` input is converted before it lands here.
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::optional<CanonicalCase> canonical_case;
  std::size_t resolution = 64;
  double tolerance = 1e-10;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
  unsigned jobs = 0;
  VerifyMode verify = VerifyMode::Sampled;
};

/// Formats a double with 17 significant digits ("null" for non-finite values).
std::string format_number(double value);

/// Runs a validated configuration, writing the document to `out` (or to
/// config.output_path). Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
