#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace agelab::cli {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
};

/// Machine-readable outcome of one experiment run.
struct RunSummary {
  std::string experiment;
  std::vector<CheckResult> checks;
  double duration_s = 0.0;
  std::uint64_t seed = 0;
  std::string tool_version;

  bool passed() const;
};

Json summary_to_json(const RunSummary& summary);

/// Runs the experiment, writes its CSV artifacts plus
/// <out>/<experiment>_summary.json, and prints one line per check unless
/// quiet.
RunSummary run_experiment(const ExperimentConfig& cfg);

/// Aggregates previously written summary documents into one report with a
/// stable key order. Duplicate experiment names get a deterministic ".k"
/// run-index suffix.
Json emit_report(const std::vector<Json>& summaries);

}  // namespace agelab::cli
