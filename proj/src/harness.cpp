#include "sprsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "sprsim/channel.hpp"
#include "sprsim/downlink.hpp"
#include "sprsim/estimation.hpp"
#include "sprsim/precoding.hpp"
#include "sprsim/rng.hpp"
#include "sprsim/uplink.hpp"
#include "sprsim/version.hpp"

namespace sprsim {

namespace {

std::vector<int> piloted_columns(const PilotPlan& plan, int cell) {
  std::vector<int> cols;
  for (std::size_t k = 0; k < plan.row[cell].size(); ++k) {
    if (plan.row[cell][k] >= 0) cols.push_back(static_cast<int>(k));
  }
  return cols;
}

// Precoder for one base station. Cells with unpiloted users (possible
// outside the cooperating cluster) precode over the piloted subset and keep
// zero columns for the rest; a fully unpiloted cell stays silent.
MatC build_precoder(Precoder prec, const MatC& hhat, const NullSpaceBasis* ns,
                    const PilotPlan& plan, int cell) {
  const std::vector<int> cols = piloted_columns(plan, cell);
  const int k_full = static_cast<int>(hhat.cols());
  MatC active = hhat;
  const bool partial = static_cast<int>(cols.size()) != k_full;
  if (partial) {
    if (cols.empty()) return MatC::Zero(hhat.rows(), k_full);
    active.resize(hhat.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
      active.col(static_cast<Eigen::Index>(c)) = hhat.col(cols[c]);
  }
  MatC w;
  switch (prec) {
    case Precoder::kMf:
      w = mf_precoder(active).w;
      break;
    case Precoder::kZf:
      w = zf_precoder(active, cell).w;
      break;
    case Precoder::kMfMbd:
      w = mf_mbd_precoder(active, *ns).w;
      break;
    case Precoder::kZfMbd:
      w = zf_mbd_precoder(active, *ns, cell).w;
      break;
  }
  if (!partial) return w;
  MatC full = MatC::Zero(hhat.rows(), k_full);
  for (std::size_t c = 0; c < cols.size(); ++c)
    full.col(cols[c]) = w.col(static_cast<Eigen::Index>(c));
  return full;
}

// Detector rows for a measured cell, zero rows for unpiloted users.
MatC build_detector(Detector det, const MatC& hhat, const PilotPlan& plan,
                    int cell) {
  const std::vector<int> cols = piloted_columns(plan, cell);
  const int k_full = static_cast<int>(hhat.cols());
  if (static_cast<int>(cols.size()) == k_full)
    return detector_rows(hhat, det, cell);
  MatC active(hhat.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    active.col(static_cast<Eigen::Index>(c)) = hhat.col(cols[c]);
  MatC rows = MatC::Zero(k_full, hhat.rows());
  if (!cols.empty()) {
    MatC sub = detector_rows(active, det, cell);
    for (std::size_t c = 0; c < cols.size(); ++c)
      rows.row(cols[c]) = sub.row(static_cast<Eigen::Index>(c));
  }
  return rows;
}

}  // namespace

TrialOutput run_trial(const ScenarioConfig& cfg, const Layout& layout,
                      int trial) {
  const int n_cells = static_cast<int>(layout.bs.size());

  auto rng_drop = make_rng(cfg.seed, trial, streams::kUserDrop);
  NetworkRealization net =
      drop_users(layout, cfg.users_per_cell_min, cfg.users_per_cell_max,
                 cfg.min_user_distance, rng_drop);
  auto rng_shadow = make_rng(cfg.seed, trial, streams::kShadowing);
  LargeScale ls = large_scale(net, cfg.cell_radius, cfg.pathloss_exponent,
                              cfg.shadow_std, rng_shadow);

  std::vector<CellGrouping> groups(n_cells);
  for (int j = 0; j < n_cells; ++j) {
    VecD serving = ls.beta[j].row(j).transpose();
    groups[j] = classify_users(serving, cfg.grouping_param);
  }
  std::vector<CellGrouping> cluster(groups.begin(),
                                    groups.begin() + layout.cluster_size);
  PilotBudgets budgets = pilot_budgets(cluster);

  PilotPlan plan;
  switch (cfg.scheme) {
    case Scheme::kConventional:
      plan = assign_conventional(groups, budgets);
      break;
    case Scheme::kSoftReuse:
      plan = assign_spr(groups, layout.pilot_class, layout.adjacent,
                        layout.cluster_size, budgets);
      break;
    case Scheme::kOrthogonal:
      plan = assign_orthogonal(groups, layout.pilot_class, layout.adjacent,
                               layout.cluster_size, budgets);
      break;
  }

  const double overhead_factor = cfg.overhead * plan.budget_ratio;
  const double sigma2 = cfg.noise_variance_mw();
  const bool mbd = is_mbd(cfg.precoder);
  const std::vector<int> measured = cfg.resolved_measured_cells();
  const int n_measured = static_cast<int>(measured.size());

  struct Acc {
    VecD ul_lin, ul_rate, dl_lin, dl_rate, mse;
  };
  std::vector<Acc> acc(n_measured);
  for (int m = 0; m < n_measured; ++m) {
    int k = net.users_per_cell[measured[m]];
    acc[m].ul_lin = VecD::Zero(k);
    acc[m].ul_rate = VecD::Zero(k);
    acc[m].dl_lin = VecD::Zero(k);
    acc[m].dl_rate = VecD::Zero(k);
    acc[m].mse = VecD::Zero(k);
  }

  std::vector<MatC> hhat(n_cells);
  std::vector<NullSpaceBasis> null_bases(mbd ? n_cells : 0);
  std::vector<MatC> precoders(n_cells);

  for (int d = 0; d < cfg.inner_fading_draws; ++d) {
    auto rng_fading = make_rng(cfg.seed, trial, streams::kFading + d);
    ChannelSet ch = small_scale(net, ls, cfg.antennas_per_bs, rng_fading);
    auto rng_noise = make_rng(cfg.seed, trial, streams::kPilotNoise + d);
    for (int i = 0; i < n_cells; ++i) {
      MatC y = receive_pilots(ch, plan, i, cfg.pilot_power, sigma2, rng_noise);
      hhat[i] = estimate_cell(y, plan, i, cfg.pilot_power);
      if (mbd) {
        MatC stacked =
            estimate_intercell(y, plan, layout.pilot_class[i], cfg.pilot_power);
        null_bases[i] = null_space(stacked, cfg.antennas_per_bs);
      }
    }
    for (int i = 0; i < n_cells; ++i) {
      precoders[i] = build_precoder(cfg.precoder, hhat[i],
                                    mbd ? &null_bases[i] : nullptr, plan, i);
    }
    for (int m = 0; m < n_measured; ++m) {
      const int cell = measured[m];
      MatC rows = build_detector(cfg.detector, hhat[cell], plan, cell);
      VecD ul = ul_sinr_cell(rows, ch, cell, cfg.ul_power, sigma2);
      VecD dl = dl_sinr_cell(ch, cell, precoders, cfg.dl_power, sigma2);
      VecD mse = per_user_mse(hhat[cell], ch.h[cell][cell]);
      for (int k = 0; k < ul.size(); ++k) {
        if (!std::isfinite(ul(k))) ul(k) = 0.0;  // unpiloted: zero rows
        acc[m].ul_lin(k) += ul(k);
        acc[m].ul_rate(k) += rate_from_sinr(ul(k), overhead_factor);
        acc[m].dl_lin(k) += dl(k);
        acc[m].dl_rate(k) += rate_from_sinr(dl(k), overhead_factor);
        acc[m].mse(k) += mse(k);
      }
    }
  }

  TrialOutput out;
  out.summary.trial = trial;
  out.summary.budgets = plan.budgets;
  out.summary.tau = plan.tau;
  out.summary.overhead_factor = overhead_factor;
  out.summary.demoted = plan.demoted;
  out.summary.unpiloted = plan.unpiloted;

  const double draws = static_cast<double>(cfg.inner_fading_draws);
  for (int m = 0; m < n_measured; ++m) {
    const int cell = measured[m];
    VecD limit = pc_limit_cell(ls, plan, cell);
    for (int k = 0; k < net.users_per_cell[cell]; ++k) {
      UserRecord r;
      r.trial = trial;
      r.cell = cell;
      r.user = k;
      r.center = groups[cell].is_center[k];
      r.ul_sinr = acc[m].ul_lin(k) / draws;
      r.ul_rate = acc[m].ul_rate(k) / draws;
      r.dl_sinr = acc[m].dl_lin(k) / draws;
      r.dl_rate = acc[m].dl_rate(k) / draws;
      r.mse = acc[m].mse(k) / draws;
      r.pc_limit = limit(k);
      out.records.push_back(r);
    }
  }
  return out;
}

ExperimentResult run_experiment(const ScenarioConfig& cfg) {
  cfg.validate();
  Layout layout = build_layout(cfg.total_cells, cfg.cell_radius);

  std::vector<TrialOutput> slots(cfg.trials);
  unsigned hw = std::thread::hardware_concurrency();
  int n_threads = std::min<int>(hw == 0 ? 1 : static_cast<int>(hw), cfg.trials);

  if (n_threads <= 1) {
    for (int t = 0; t < cfg.trials; ++t) slots[t] = run_trial(cfg, layout, t);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
      for (;;) {
        int t = next.fetch_add(1);
        if (t >= cfg.trials) return;
        try {
          slots[t] = run_trial(cfg, layout, t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
  }

  ExperimentResult res;
  for (TrialOutput& slot : slots) {
    res.summaries.push_back(slot.summary);
    res.records.insert(res.records.end(), slot.records.begin(),
                       slot.records.end());
  }
  res.report = aggregate(res.records, res.summaries);
  return res;
}

void write_outputs(const ExperimentResult& result, const ScenarioConfig& cfg,
                   const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto open = [&](const std::string& name) {
    std::ofstream f(out_dir + "/" + name);
    if (!f) throw std::runtime_error("cannot write " + out_dir + "/" + name);
    return f;
  };
  {
    auto f = open("records.csv");
    write_records_csv(f, result.records);
  }
  {
    auto f = open("summary.csv");
    write_summary_csv(f, result.report);
  }
  for (const auto& [key, cdf] : result.report.cdfs) {
    std::string stem = key;
    std::replace(stem.begin(), stem.end(), '.', '_');
    auto f = open("cdf_" + stem + ".csv");
    write_cdf_csv(f, cdf);
  }
  {
    auto f = open("metadata.txt");
    f << "sprsim " << kVersion << "\n" << serialize_config(cfg);
  }
}

}  // namespace sprsim
