#pragma once

// Named verification suites over the registered groups and worked cases,
// with deterministic JSON reports.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mgd/report.hpp"
#include "mgd/tolerances.hpp"

namespace mgd {

inline constexpr std::string_view kArtifactVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct SuiteConfig {
  std::string suite = "all";
  std::vector<std::string> groups;  // empty: default_group_names()
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  Tolerances tol;
  ProbeOptions probe;
  std::vector<double> radii = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  std::string out;
  Exec exec = Exec::parallel;

  nlohmann::json to_json() const;
};

/// Overlays keys from a JSON config document. Unknown keys or wrongly typed
/// values throw ConfigurationError.
void apply_config_json(SuiteConfig& cfg, const nlohmann::json& doc);

/// A runnable check. `run` receives the child seed derived from the root seed
/// and the check id.
struct CheckDescriptor {
  std::string id;
  std::string suite;
  std::string anchor;
  std::string description;
  std::vector<std::string> tolerances;
  std::function<VerificationReport(std::uint64_t seed)> run;
};

/// Every check selected by the config, in execution order. Throws
/// ConfigurationError for unknown suites or groups.
std::vector<CheckDescriptor> build_checks(const SuiteConfig& cfg);

struct SuiteReport {
  SuiteConfig config;
  std::vector<VerificationReport> entries;  // sorted by check id
  std::size_t failures = 0;
  double wall_seconds = 0.0;

  bool passed() const { return failures == 0; }
  /// The deterministic part: entries and verdict.
  nlohmann::json comparison_json() const;
  nlohmann::json to_json() const;
};

SuiteReport run_suite(const SuiteConfig& cfg);

const std::vector<std::string>& suite_names();

/// Alphabetical listing of groups, functions, slopes and suites.
std::string list_registry();

/// Anchor, description and tolerance values of one check. Throws
/// ConfigurationError when the id is not part of the configured suites.
std::string explain(const SuiteConfig& cfg, std::string_view check_id);

/// Fixed-width human summary, one line per entry.
std::string summary_table(const SuiteReport& report);

}  // namespace mgd
