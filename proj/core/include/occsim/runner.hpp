#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "occsim/scenarios.hpp"
#include "occsim/simulation.hpp"
#include "occsim/verify.hpp"

namespace occsim {

struct RunArtifacts {
  Scenario scenario;
  RunResult result;
  VerifierReport verdict;
};

/// Full pipeline: build the world, simulate to quiescence, audit the
/// commit log. The verdict is folded into the metrics.
RunArtifacts run_scenario(const Scenario& scenario);

/// Writes trace.tsv, metrics.json and commitlog.json under out_dir.
void write_artifacts(const RunArtifacts& artifacts, const std::filesystem::path& out_dir);

nlohmann::json metrics_to_json(const RunMetrics& metrics);

struct StrategyRun {
  Strategy strategy;
  RunArtifacts artifacts;
};

struct StrategyComparison {
  std::vector<StrategyRun> runs;

  /// Tab-delimited table, one strategy per row, stable column order.
  std::string table() const;
  nlohmann::json to_json() const;
};

/// Replays byte-identical actions under each strategy (runs execute in
/// parallel, results ordered by input index). Requires >= 2 strategies,
/// else InvalidSpec.
StrategyComparison compare_strategies(const Scenario& base,
                                      const std::vector<Strategy>& strategies);

struct SweepPoint {
  int hosts{0};
  RunMetrics metrics;
  bool verifier_pass{false};
};

/// Re-generates the configured workload at each host count and runs it;
/// independent runs execute in parallel and are merged by index.
std::vector<SweepPoint> sweep_hosts(const RunConfig& base, const std::vector<int>& host_counts);
std::string sweep_table(const std::vector<SweepPoint>& points);

/// Parses "2..64" (doubling steps) or "2..64:8" (arithmetic step 8).
std::vector<int> parse_host_range(const std::string& text);  // throws InvalidSpec

}  // namespace occsim
