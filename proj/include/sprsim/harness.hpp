#pragma once

#include <string>
#include <vector>

#include "sprsim/config.hpp"
#include "sprsim/metrics.hpp"
#include "sprsim/topology.hpp"

namespace sprsim {

struct TrialOutput {
  std::vector<UserRecord> records;
  TrialSummary summary;
};

// One Monte-Carlo trial: drop users, draw shadowing, group, assign pilots,
// then average estimation error and link SINRs over the trial's fast-fading
// draws. Positions and gains stay fixed within the trial. Every base station
// precodes; detection and per-user statistics cover the measured cells only.
TrialOutput run_trial(const ScenarioConfig& cfg, const Layout& layout,
                      int trial);

struct ExperimentResult {
  std::vector<UserRecord> records;
  std::vector<TrialSummary> summaries;
  AggregateReport report;
};

// Runs cfg.trials independent trials (threaded when hardware allows; output
// is ordered by trial and identical at any thread count) and aggregates.
ExperimentResult run_experiment(const ScenarioConfig& cfg);

// records.csv, summary.csv, one cdf_<metric>_<class>.csv per pooled CDF, and
// metadata.txt into `out_dir` (created if missing).
void write_outputs(const ExperimentResult& result, const ScenarioConfig& cfg,
                   const std::string& out_dir);

}  // namespace sprsim
