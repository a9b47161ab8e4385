// Commands behind the bstrata CLI: enumeration with dimension histograms,
// generating-function dumps, verification suites, single-diagram inspection
// and primitive-ratio tables.
//
// Every command is deterministic in its RunConfig; the worker count only
// changes how the enumeration tree is scheduled.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bstrata/reduced_word.hpp"

namespace bstrata {

enum class OutputFormat { json, csv, table };

/// Exit codes of the CLI.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Bad input or an exceeded cap; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDimensionCap = 8;
inline constexpr int kCountsOnlyCap = 10;
inline constexpr int kDefaultGfOrder = 30;
inline constexpr int kDefaultRatioOrder = 100;
inline constexpr int kKernelSamples = 10000;

struct RunConfig {
  std::string subcommand;
  std::optional<int> n;
  std::optional<int> max_n;
  OutputFormat format = OutputFormat::json;
  int jobs = 1;
  std::optional<std::string> out;
  std::optional<std::string> bits;
  std::optional<int> order;
  std::uint64_t seed = 0;
  std::string suite = "all";
  bool counts_only = false;
  bool unsafe_no_cap = false;
  bool evaluate = false;
};

struct DimensionHistogram {
  int n = 0;
  /// Empty when only counting.
  std::map<int, std::uint64_t> counts;
  std::uint64_t total = 0;
  bool has_dimensions = true;
};

/// Parallel pruned enumeration over `jobs` workers. Prefixes of the search
/// tree are handed out from a shared queue; per-worker histograms are summed.
DimensionHistogram enumerate_histogram(int n, int jobs, bool with_dimensions);

/// Random Cauchon diagram: a random walk down the pruned search tree,
/// restarted whenever it hits a pruned node.
Diagram sample_cauchon(const ReducedWord& word, std::mt19937_64& rng);

struct Counterexample {
  std::string diagram;  // hex, or another identifier
  std::string expected;
  std::string actual;
};

struct VerifyCheck {
  std::string name;
  std::optional<int> n;
  std::uint64_t checked = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;
  bool passed() const;
};

/// suite in {all, lw, tau, kernel, bruhat, series}. With n set, the
/// diagram suites run at that rank only.
VerifyReport run_verify(const std::string& suite, std::optional<int> n,
                        std::uint64_t seed);

struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;
};

std::string render_histogram(const DimensionHistogram& h, OutputFormat f);
std::string render_verify(const VerifyReport& r, OutputFormat f);

CommandOutput cmd_enumerate(const RunConfig& cfg);
CommandOutput cmd_gf(const RunConfig& cfg);
CommandOutput cmd_verify(const RunConfig& cfg);
CommandOutput cmd_diagram(const RunConfig& cfg);
CommandOutput cmd_primitive_ratio(const RunConfig& cfg);

/// Dispatch on cfg.subcommand. Usage errors become kExitUsage with the
/// message as text.
CommandOutput run_command(const RunConfig& cfg);

}  // namespace bstrata
