#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sprsim/grouping.hpp"
#include "sprsim/types.hpp"

namespace sprsim {

// One measured user in one trial. SINRs are linear and already averaged over
// the fast-fading draws of the trial; rates fold in the training overhead.
struct UserRecord {
  int trial = 0;
  int cell = 0;
  int user = 0;
  bool center = true;
  double ul_sinr = 0.0;
  double ul_rate = 0.0;
  double dl_sinr = 0.0;
  double dl_rate = 0.0;
  double mse = 0.0;
  double pc_limit = 0.0;  // uplink SINR ceiling set by pilot sharing
};

// Bookkeeping for one trial's pilot assignment.
struct TrialSummary {
  int trial = 0;
  PilotBudgets budgets;
  int tau = 0;
  double overhead_factor = 0.0;  // mu * tau / shortest conventional budget
  int demoted = 0;
  int unpiloted = 0;
};

// Spectral efficiency in bit/s/Hz after the training overhead. A factor at
// or above one means the whole coherence block is spent on pilots.
double rate_from_sinr(double sinr, double overhead_factor);

// Empirical CDF with strictly increasing support (duplicates keep the last,
// i.e. highest, cumulative fraction).
struct CdfTable {
  std::vector<double> value;
  std::vector<double> cum;
};

CdfTable make_cdf(std::vector<double> values);

// Interpolated quantile of an unsorted sample, q in [0, 1].
double quantile(std::vector<double> values, double q);

struct AggregateReport {
  int trials = 0;
  std::int64_t users = 0;
  std::int64_t center_users = 0;
  std::int64_t edge_users = 0;
  // Mean over (trial, cell) pairs of the summed user rates, bit/s/Hz.
  double ul_cell_throughput = 0.0;
  double dl_cell_throughput = 0.0;
  // Per-trial class means averaged over the trials where the class occurs;
  // NaN when it never does.
  double mse_center = 0.0;
  double mse_edge = 0.0;
  double mean_tau = 0.0;
  double mean_overhead_factor = 0.0;
  std::int64_t demoted = 0;
  std::int64_t unpiloted = 0;
  // Keyed "<metric>.<class>" with metric in {ul_sinr, ul_rate, dl_sinr,
  // dl_rate} and class in {center, edge, all}.
  std::map<std::string, CdfTable> cdfs;
};

AggregateReport aggregate(const std::vector<UserRecord>& records,
                          const std::vector<TrialSummary>& summaries);

// Round-trip safe decimal rendering (shortest %.17g form).
std::string format_double(double x);

void write_records_csv(std::ostream& os, const std::vector<UserRecord>& records);
std::vector<UserRecord> read_records_csv(std::istream& is);
void write_cdf_csv(std::ostream& os, const CdfTable& cdf);
void write_summary_csv(std::ostream& os, const AggregateReport& report);

}  // namespace sprsim
