#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace crspan::cli {

enum class Command { kVerify, kAnalyze, kIdentitySolve, kIdentityCheck, kIdentitySharp, kDecompose, kBuiltin };
enum class Format { kTable, kJson };

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotSphereMap = 1;
inline constexpr int kExitHypothesisFailed = 2;
inline constexpr int kExitMalformedInput = 3;
inline constexpr int kExitInvariantViolation = 4;

struct RunConfig {
  Command command = Command::kAnalyze;
  std::optional<std::string> input;
  Format format = Format::kTable;
  bool approx = false;
  std::size_t trials = 3;
  std::uint64_t seed = 0;

  // Built-in map selection: "dt", "hst" or "linear".
  std::optional<std::string> builtin;
  std::size_t n = 2;
  std::optional<std::size_t> target_n;
  std::string u = "1/2";
  std::string u_s = "1/2";
  std::string u_t = "1/2";

  // identity-sharp / decompose
  std::optional<std::size_t> k;
  // identity-solve: "matrix", "conjugate" or "both"
  std::string form = "matrix";
};

/// Parses argv. On --help or a usage error, returns nullopt after writing
/// to `out`/`err` and storing the exit code in `exit_code`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Runs one command: report on `out`, diagnostics on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace crspan::cli
