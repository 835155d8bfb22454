#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsb/analysis.hpp"
#include "lsb/ordering.hpp"

namespace lsb {

enum class OutputFormat { Table, Structured };

/// Settings shared by every command. Loaded from the JSON file named by
/// $LSB_CONFIG (or --config), then overridden by flags.
struct RunConfig {
  std::vector<std::string> vars{"x", "y", "z"};
  TieBreak tie_break = TieBreak::DegRevLex;
  /// Variable names, largest first; empty means the order of `vars`.
  std::vector<std::string> precedence;
  /// Unset: Mora everywhere except `search`, which uses auto.
  std::optional<ConeMethod> method;
  /// Declared jet degree D of truncated-series input (D >= 2).
  std::optional<int> truncation;
  /// Cap for the adaptive truncated route.
  int max_truncation = 240;
  int hf_degree_bound = 0;
  std::size_t max_pairs = 100'000;
  std::size_t max_steps = 1'000'000;
  bool chain_criterion = false;
  bool verify_divisions = false;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Table;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;

  /// Throws UsageError on an inconsistent setting.
  void validate() const;
  Ring ring() const;
  AnalysisOptions analysis_options(ConeMethod fallback) const;
};

inline constexpr const char* kConfigEnvVar = "LSB_CONFIG";

/// Reads a JSON object whose keys are the RunConfig field names; unknown keys
/// are rejected.
RunConfig load_run_config(const std::filesystem::path& path);

/// Exit codes of run_cli.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitResource = 3 };

/// Entry point of the `lsb` tool; args excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lsb
