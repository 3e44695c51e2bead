#include "sprsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace sprsim {

double rate_from_sinr(double sinr, double overhead_factor) {
  double payload = 1.0 - overhead_factor;
  if (payload <= 0.0) return 0.0;
  return payload * std::log2(1.0 + sinr);
}

CdfTable make_cdf(std::vector<double> values) {
  CdfTable cdf;
  if (values.empty()) return cdf;
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
    cdf.value.push_back(values[i]);
    cdf.cum.push_back(static_cast<double>(i + 1) / n);
  }
  return cdf;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  double pos = q * static_cast<double>(values.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= values.size()) return values.back();
  double frac = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

namespace {

double mean_or_nan(double sum, std::int64_t n) {
  return n > 0 ? sum / static_cast<double>(n)
               : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

AggregateReport aggregate(const std::vector<UserRecord>& records,
                          const std::vector<TrialSummary>& summaries) {
  AggregateReport rep;
  rep.users = static_cast<std::int64_t>(records.size());

  // Cell throughput: sum rates within each (trial, cell), then average.
  std::unordered_map<std::int64_t, std::pair<double, double>> per_cell;
  // Per-trial class MSE means.
  struct TrialMse {
    double sum_c = 0, sum_e = 0;
    std::int64_t n_c = 0, n_e = 0;
  };
  std::unordered_map<int, TrialMse> per_trial;

  std::vector<double> pool[4][3];  // metric x {center, edge, all}
  for (const UserRecord& r : records) {
    std::int64_t key = (static_cast<std::int64_t>(r.trial) << 20) | r.cell;
    auto& tp = per_cell[key];
    tp.first += r.ul_rate;
    tp.second += r.dl_rate;

    auto& tm = per_trial[r.trial];
    if (r.center) {
      ++rep.center_users;
      tm.sum_c += r.mse;
      ++tm.n_c;
    } else {
      ++rep.edge_users;
      tm.sum_e += r.mse;
      ++tm.n_e;
    }
    const double vals[4] = {r.ul_sinr, r.ul_rate, r.dl_sinr, r.dl_rate};
    for (int m = 0; m < 4; ++m) {
      pool[m][r.center ? 0 : 1].push_back(vals[m]);
      pool[m][2].push_back(vals[m]);
    }
  }

  double ul = 0, dl = 0;
  for (const auto& [key, sums] : per_cell) {
    (void)key;
    ul += sums.first;
    dl += sums.second;
  }
  rep.ul_cell_throughput = mean_or_nan(ul, static_cast<std::int64_t>(per_cell.size()));
  rep.dl_cell_throughput = mean_or_nan(dl, static_cast<std::int64_t>(per_cell.size()));

  double msum_c = 0, msum_e = 0;
  std::int64_t mt_c = 0, mt_e = 0;
  for (const auto& [trial, tm] : per_trial) {
    (void)trial;
    if (tm.n_c > 0) {
      msum_c += tm.sum_c / static_cast<double>(tm.n_c);
      ++mt_c;
    }
    if (tm.n_e > 0) {
      msum_e += tm.sum_e / static_cast<double>(tm.n_e);
      ++mt_e;
    }
  }
  rep.mse_center = mean_or_nan(msum_c, mt_c);
  rep.mse_edge = mean_or_nan(msum_e, mt_e);

  rep.trials = static_cast<int>(summaries.size());
  double tau_sum = 0, ovh_sum = 0;
  for (const TrialSummary& s : summaries) {
    tau_sum += s.tau;
    ovh_sum += s.overhead_factor;
    rep.demoted += s.demoted;
    rep.unpiloted += s.unpiloted;
  }
  rep.mean_tau = mean_or_nan(tau_sum, rep.trials);
  rep.mean_overhead_factor = mean_or_nan(ovh_sum, rep.trials);

  static const char* metric_names[4] = {"ul_sinr", "ul_rate", "dl_sinr",
                                        "dl_rate"};
  static const char* class_names[3] = {"center", "edge", "all"};
  for (int m = 0; m < 4; ++m) {
    for (int c = 0; c < 3; ++c) {
      rep.cdfs[std::string(metric_names[m]) + "." + class_names[c]] =
          make_cdf(std::move(pool[m][c]));
    }
  }
  return rep;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_records_csv(std::ostream& os, const std::vector<UserRecord>& records) {
  os << "trial,cell,user,class,ul_sinr,ul_rate,dl_sinr,dl_rate,mse,pc_limit\n";
  for (const UserRecord& r : records) {
    os << r.trial << ',' << r.cell << ',' << r.user << ','
       << (r.center ? "center" : "edge") << ',' << format_double(r.ul_sinr)
       << ',' << format_double(r.ul_rate) << ',' << format_double(r.dl_sinr)
       << ',' << format_double(r.dl_rate) << ',' << format_double(r.mse) << ','
       << format_double(r.pc_limit) << '\n';
  }
}

std::vector<UserRecord> read_records_csv(std::istream& is) {
  std::vector<UserRecord> out;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first) {  // header
      first = false;
      continue;
    }
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 10) {
      throw std::runtime_error("records csv: bad row: " + line);
    }
    UserRecord r;
    r.trial = std::stoi(fields[0]);
    r.cell = std::stoi(fields[1]);
    r.user = std::stoi(fields[2]);
    r.center = fields[3] == "center";
    r.ul_sinr = std::stod(fields[4]);
    r.ul_rate = std::stod(fields[5]);
    r.dl_sinr = std::stod(fields[6]);
    r.dl_rate = std::stod(fields[7]);
    r.mse = std::stod(fields[8]);
    r.pc_limit = std::stod(fields[9]);
    out.push_back(r);
  }
  return out;
}

void write_cdf_csv(std::ostream& os, const CdfTable& cdf) {
  os << "value,cum_fraction\n";
  for (std::size_t i = 0; i < cdf.value.size(); ++i) {
    os << format_double(cdf.value[i]) << ',' << format_double(cdf.cum[i])
       << '\n';
  }
}

void write_summary_csv(std::ostream& os, const AggregateReport& rep) {
  os << "key,value\n";
  os << "trials," << rep.trials << '\n';
  os << "users," << rep.users << '\n';
  os << "center_users," << rep.center_users << '\n';
  os << "edge_users," << rep.edge_users << '\n';
  os << "ul_cell_throughput," << format_double(rep.ul_cell_throughput) << '\n';
  os << "dl_cell_throughput," << format_double(rep.dl_cell_throughput) << '\n';
  os << "mse_center," << format_double(rep.mse_center) << '\n';
  os << "mse_edge," << format_double(rep.mse_edge) << '\n';
  os << "mean_tau," << format_double(rep.mean_tau) << '\n';
  os << "mean_overhead_factor," << format_double(rep.mean_overhead_factor)
     << '\n';
  os << "demoted," << rep.demoted << '\n';
  os << "unpiloted," << rep.unpiloted << '\n';
}

}  // namespace sprsim
