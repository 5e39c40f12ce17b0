#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace theta::cli {

enum class OutputFormat { Json, Csv, Markdown };

/// Everything that determines a run. Identical configs give identical
/// output, whatever the thread count.
struct RunConfig {
  std::string command;   ///< harmonics | check | decompose | invariants | occurrence | catalog
  std::string target;    ///< check target
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> m;
  std::optional<int> d;
  std::optional<int> d_max;
  std::optional<int> size_max;
  std::optional<int> k_max;
  std::optional<int> degree_override;
  std::optional<std::string> lambda;
  std::string space = "harmonic";
  bool with_basis = false;
  OutputFormat format = OutputFormat::Json;
  std::string out;
  int threads = 1;
  std::uint64_t seed = 0;
};

/// Bad flags or missing parameters.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOutput {
  int exit_code = 0;   ///< 0 pass, 1 falsified, 2 usage or unsupported
  std::string text;    ///< rendered artifact (empty on usage errors)
  std::string message; ///< diagnostic for stderr
};

/// Runs one command; never throws.
CommandOutput run_command(const RunConfig& config);

/// Full command line: parse, run, write to --out or `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace theta::cli
