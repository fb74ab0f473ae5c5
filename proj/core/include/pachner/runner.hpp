#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pachner/scalar.hpp"

namespace pachner {

enum class Check { Boundary, Transport, Holonomy, Flatness, Rank, Ratio, Main, Euclidean };

inline constexpr std::array<Check, 8> kAllChecks = {Check::Boundary, Check::Transport, Check::Holonomy,
                                                    Check::Flatness, Check::Rank,      Check::Ratio,
                                                    Check::Main,     Check::Euclidean};

std::string_view to_string(Check check);

/// Comma-separated check names, or "all". Throws InvalidConfig.
std::vector<Check> parse_check_list(std::string_view list);

struct TrialConfig {
  std::uint64_t seed = 42;
  long trials = 10;
  long coord_range = 10;
  std::vector<Check> checks{kAllChecks.begin(), kAllChecks.end()};
  Scalar perturb_delta{1, 7};
  /// Perturbation directions per Euclidean trial.
  long directions = 20;
  /// Worker threads; does not affect the report.
  unsigned jobs = 1;
  /// Adds wall-clock timings, which makes reports nondeterministic.
  bool timing = false;
};

/// Throws InvalidConfig: trials >= 1, coord_range >= 2, directions >= 1,
/// nonempty check list, jobs >= 1.
void validate(const TrialConfig& config);

enum class Status { Pass, Fail, Skip };

std::string_view to_string(Status status);

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

struct RunResult {
  /// The JSON report ("config", "trials", "summary"), newline-terminated.
  std::string report_json;
  bool all_passed = false;
  std::map<Check, CheckTally> tallies;
  /// Human-readable one-liners for the console.
  std::vector<std::string> summary_lines;
};

/**
 * Runs the selected checks over `trials` independently seeded
 * configurations. Trial k draws from streams stream_seed(seed, k, salt), so
 * the report is a pure function of the config (timing aside) regardless of
 * `jobs`. Throws InvalidConfig.
 */
RunResult run(const TrialConfig& config);

}  // namespace pachner
