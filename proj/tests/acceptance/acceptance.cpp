// Acceptance suite: one criterion per invocation (argv[1] in 1..8), one
// PASS/FAIL line per criterion on stdout. Tolerances are fixed here, not
// tunable from outside. Trial counts are sized for a single desk-class core;
// seeds are fixed so every run is reproducible.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sprsim/channel.hpp"
#include "sprsim/config.hpp"
#include "sprsim/downlink.hpp"
#include "sprsim/estimation.hpp"
#include "sprsim/grouping.hpp"
#include "sprsim/harness.hpp"
#include "sprsim/metrics.hpp"
#include "sprsim/pilots.hpp"
#include "sprsim/precoding.hpp"
#include "sprsim/rng.hpp"
#include "sprsim/topology.hpp"
#include "sprsim/uplink.hpp"

using namespace sprsim;

namespace {

bool g_all_ok = true;

bool expect(bool ok, const std::string& what) {
  std::printf("  %-4s %s\n", ok ? "ok" : "FAIL", what.c_str());
  if (!ok) g_all_ok = false;
  return ok;
}

bool expect_range(double x, double lo, double hi, const std::string& what) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s = %.4g (accept [%.4g, %.4g])",
                what.c_str(), x, lo, hi);
  return expect(x >= lo && x <= hi, buf);
}

double median_of(std::vector<double> v) { return quantile(std::move(v), 0.5); }

double to_db(double x) { return 10.0 * std::log10(x); }

enum ClassFilter { kCenterOnly, kEdgeOnly, kBothClasses };

std::vector<double> collect(const std::vector<UserRecord>& records,
                            ClassFilter cls,
                            const std::function<double(const UserRecord&)>& f) {
  std::vector<double> out;
  for (const UserRecord& r : records) {
    if (cls == kCenterOnly && !r.center) continue;
    if (cls == kEdgeOnly && r.center) continue;
    out.push_back(f(r));
  }
  return out;
}

ScenarioConfig base_config() {
  ScenarioConfig cfg;  // defaults already carry the standard scenario
  cfg.seed = 20260814;
  cfg.inner_fading_draws = 1;
  return cfg;
}

MatC random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  MatC m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = cplx(n(rng), n(rng));
  return m;
}

// ---- 1: fast property suite -------------------------------------------

bool criterion_1() {
  {
    MatC phi = dft_pilot_matrix(15, 15);
    double err = (phi * phi.adjoint() - MatC::Identity(15, 15))
                     .cwiseAbs()
                     .maxCoeff();
    expect(err <= 1e-12, "pilot rows orthonormal (max dev " +
                             format_double(err) + " <= 1e-12)");
  }
  {
    MatC a = random_matrix(4, 12, 1001);
    MatC p = projector(null_space(a, 12));
    expect((p - p.adjoint()).norm() <= 1e-10, "projector Hermitian <= 1e-10");
    expect((p * p - p).norm() <= 1e-10, "projector idempotent <= 1e-10");
  }
  {
    MatC a = random_matrix(5, 24, 1002);
    MatC hhat = random_matrix(24, 4, 1003);
    NullSpaceBasis ns = null_space(a, 24);
    const MatC w_mbd[2] = {mf_mbd_precoder(hhat, ns).w,
                           zf_mbd_precoder(hhat, ns, 0).w};
    const char* w_name[2] = {"mf-mbd", "zf-mbd"};
    for (int i = 0; i < 2; ++i) {
      double rel = (a * w_mbd[i]).norm() / (a.norm() * w_mbd[i].norm());
      expect(rel <= 1e-8, std::string("null-space leakage (") + w_name[i] +
                              ") <= 1e-8 relative");
    }
  }
  {
    MatC hhat = random_matrix(64, 8, 1004);
    MatC rows = detector_rows(hhat, Detector::kZf, 0);
    expect((rows * hhat - MatC::Identity(8, 8)).norm() <= 1e-8,
           "zf detection identity <= 1e-8");
    PrecodeResult zf = zf_precoder(hhat, 0);
    MatC eff = std::sqrt(zf.gamma) * hhat.transpose() * zf.w;
    expect((eff - MatC::Identity(8, 8)).norm() <= 1e-8,
           "zf precoding identity <= 1e-8");
    NullSpaceBasis ns = null_space(random_matrix(6, 64, 1005), 64);
    PrecodeResult zfm = zf_mbd_precoder(hhat, ns, 0);
    MatC effm = std::sqrt(zfm.gamma) * hhat.transpose() * zfm.w;
    expect((effm - MatC::Identity(8, 8)).norm() <= 1e-8,
           "zf-mbd precoding identity <= 1e-8");
  }
  {
    // Noise-free estimation on 3 cells, M = 8, K = 4, full pilot reuse:
    // the estimate must equal the same-row channel sum exactly.
    const int cells = 3, m = 8, k = 4;
    std::vector<CellGrouping> groups(cells);
    for (auto& g : groups) {
      g.is_center.assign(k, true);
      g.center_count = k;
      g.edge_count = 0;
    }
    PilotPlan plan = assign_conventional(groups, pilot_budgets(groups));
    ChannelSet ch;
    ch.antennas = m;
    ch.h.resize(cells);
    for (int i = 0; i < cells; ++i)
      for (int j = 0; j < cells; ++j)
        ch.h[i].push_back(random_matrix(m, k, 1100 + 10 * i + j));
    std::mt19937_64 rng(0);
    double worst = 0.0;
    for (int i = 0; i < cells; ++i) {
      MatC y = receive_pilots(ch, plan, i, 2.5, 0.0, rng);
      MatC hhat = estimate_cell(y, plan, i, 2.5);
      MatC want = MatC::Zero(m, k);
      for (int j = 0; j < cells; ++j) want += ch.h[i][j];
      worst = std::max(worst, (hhat - want).norm() / want.norm());
    }
    expect(worst <= 1e-12,
           "noise-free estimate equals closed-form contamination (" +
               format_double(worst) + " <= 1e-12)");
  }
  {
    MatC hhat = random_matrix(32, 5, 1006);
    NullSpaceBasis ns = null_space(random_matrix(6, 32, 1007), 32);
    double t1 = (mf_precoder(hhat).w.adjoint() * mf_precoder(hhat).w)
                    .trace()
                    .real();
    double t2 = (mf_mbd_precoder(hhat, ns).w.adjoint() *
                 mf_mbd_precoder(hhat, ns).w)
                    .trace()
                    .real();
    expect(std::abs(t1 - 5.0) <= 1e-8 && std::abs(t2 - 5.0) <= 1e-8,
           "mf-family trace(W^H W) = K <= 1e-8");
  }
  {
    VecD beta(6);
    beta << 1.0, 0.8, 0.5, 0.3, 0.2, 0.1;
    int prev = 0;
    bool mono = true;
    for (double lambda : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.5}) {
      int e = classify_users(beta, lambda).edge_count;
      if (e < prev) mono = false;
      prev = e;
    }
    expect(mono, "edge count nondecreasing in the grouping parameter");
  }
  {
    ScenarioConfig cfg = base_config();
    cfg.antennas_per_bs = 16;
    cfg.users_per_cell_min = 2;
    cfg.users_per_cell_max = 4;
    cfg.trials = 2;
    cfg.inner_fading_draws = 2;
    cfg.scheme = Scheme::kSoftReuse;
    cfg.detector = Detector::kZf;
    cfg.precoder = Precoder::kZfMbd;
    auto text = [](const ExperimentResult& r) {
      std::ostringstream os;
      write_records_csv(os, r.records);
      return os.str();
    };
    ExperimentResult a = run_experiment(cfg);
    ExperimentResult b = run_experiment(cfg);
    expect(text(a) == text(b), "end-to-end rerun is byte-identical");
  }
  return g_all_ok;
}

// ---- 2: large-antenna convergence to the contamination limit ----------

bool criterion_2() {
  ScenarioConfig cfg = base_config();
  cfg.scheme = Scheme::kConventional;
  cfg.detector = Detector::kMf;
  cfg.precoder = Precoder::kMf;
  cfg.trials = 50;

  const int antennas[] = {64, 128, 256, 512};
  std::vector<double> med_ratio;
  for (int m : antennas) {
    cfg.antennas_per_bs = m;
    ExperimentResult res = run_experiment(cfg);
    std::vector<double> ratios;
    for (const UserRecord& r : res.records) {
      if (r.center || !std::isfinite(r.pc_limit)) continue;
      ratios.push_back(r.ul_sinr / r.pc_limit);
    }
    double med = median_of(ratios);
    med_ratio.push_back(med);
    std::printf("  M=%-4d edge users=%zu  median sinr/limit = %.4f\n", m,
                ratios.size(), med);
  }
  expect_range(med_ratio.back(), 0.7, 1.3, "median ratio at M=512");
  bool approaching = true;
  for (std::size_t i = 1; i < med_ratio.size(); ++i) {
    if (std::abs(med_ratio[i] - 1.0) >
        std::abs(med_ratio[i - 1] - 1.0) + 0.02) {
      approaching = false;
    }
  }
  expect(approaching,
         "|median ratio - 1| non-increasing over M (slack 0.02)");
  return g_all_ok;
}

// ---- 3: estimation error by class, soft reuse vs full reuse -----------

bool criterion_3() {
  ScenarioConfig cfg = base_config();
  cfg.trials = 100;
  cfg.detector = Detector::kMf;
  cfg.precoder = Precoder::kMf;

  cfg.scheme = Scheme::kConventional;
  AggregateReport conv = run_experiment(cfg).report;
  cfg.scheme = Scheme::kSoftReuse;
  AggregateReport spr = run_experiment(cfg).report;

  std::printf("  mse center: conventional %.4g, spr %.4g\n", conv.mse_center,
              spr.mse_center);
  std::printf("  mse edge:   conventional %.4g, spr %.4g\n", conv.mse_edge,
              spr.mse_edge);
  expect(spr.mse_edge <= 0.1 * conv.mse_edge,
         "spr edge mse <= 0.1 x conventional edge mse");
  expect_range(spr.mse_center / conv.mse_center, 0.9, 1.1,
               "center mse ratio spr/conventional");
  return g_all_ok;
}

// ---- 4: zf vs mf uplink SINR gap per class -----------------------------

bool criterion_4() {
  ScenarioConfig cfg = base_config();
  cfg.scheme = Scheme::kSoftReuse;
  cfg.precoder = Precoder::kMf;
  cfg.trials = 200;

  cfg.detector = Detector::kMf;
  ExperimentResult mf = run_experiment(cfg);
  cfg.detector = Detector::kZf;
  ExperimentResult zf = run_experiment(cfg);

  auto sinr = [](const UserRecord& r) { return r.ul_sinr; };
  const ClassFilter classes[2] = {kCenterOnly, kEdgeOnly};
  const char* class_name[2] = {"center", "edge"};
  for (int i = 0; i < 2; ++i) {
    double gap = to_db(median_of(collect(zf.records, classes[i], sinr))) -
                 to_db(median_of(collect(mf.records, classes[i], sinr)));
    expect_range(gap, 1.0, 3.0, std::string("median UL SINR gap zf-mf, ") +
                                    class_name[i] + " (dB)");
  }
  return g_all_ok;
}

// ---- 5: zf vs mf per-user uplink rate gap ------------------------------

bool criterion_5() {
  ScenarioConfig cfg = base_config();
  cfg.scheme = Scheme::kSoftReuse;
  cfg.precoder = Precoder::kMf;
  cfg.trials = 200;

  cfg.detector = Detector::kMf;
  ExperimentResult mf = run_experiment(cfg);
  cfg.detector = Detector::kZf;
  ExperimentResult zf = run_experiment(cfg);

  auto rate = [](const UserRecord& r) { return r.ul_rate; };
  double gap = median_of(collect(zf.records, kBothClasses, rate)) -
               median_of(collect(mf.records, kBothClasses, rate));
  expect_range(gap, 0.15, 0.45, "median UL rate gap zf-mf (bit/s/Hz)");
  return g_all_ok;
}

// ---- 6: uplink cell throughput: detector gap and overhead penalty ------

bool criterion_6() {
  ScenarioConfig cfg = base_config();
  cfg.trials = 100;
  cfg.precoder = Precoder::kMf;

  cfg.scheme = Scheme::kConventional;
  cfg.detector = Detector::kMf;
  double conv_mf = run_experiment(cfg).report.ul_cell_throughput;
  cfg.detector = Detector::kZf;
  double conv_zf = run_experiment(cfg).report.ul_cell_throughput;
  std::printf("  conventional: mf %.3f, zf %.3f bit/s/Hz\n", conv_mf, conv_zf);
  expect_range(conv_zf - conv_mf, 3.0, 7.0,
               "UL cell throughput gap zf-mf (bit/s/Hz)");

  cfg.scheme = Scheme::kSoftReuse;
  const double lambdas[] = {0.5, 0.8, 1.0};
  for (Detector det : {Detector::kMf, Detector::kZf}) {
    cfg.detector = det;
    double conv = det == Detector::kMf ? conv_mf : conv_zf;
    std::vector<double> tp;
    for (double lambda : lambdas) {
      cfg.grouping_param = lambda;
      tp.push_back(run_experiment(cfg).report.ul_cell_throughput);
    }
    std::printf("  spr %s: lambda 0.5 -> %.3f, 0.8 -> %.3f, 1.0 -> %.3f\n",
                to_string(det).c_str(), tp[0], tp[1], tp[2]);
    expect(tp[0] > tp[1] && tp[1] > tp[2],
           std::string("spr throughput strictly decreasing in lambda (") +
               to_string(det) + ")");
    expect(tp[1] < conv && tp[2] < conv,
           std::string("spr below conventional at lambda > 0.5 (") +
               to_string(det) + ")");
  }
  return g_all_ok;
}

// ---- 7: throughput vs antenna count ------------------------------------

bool criterion_7() {
  ScenarioConfig cfg = base_config();
  cfg.trials = 50;
  cfg.inner_fading_draws = 10;
  cfg.detector = Detector::kMf;  // uplink side of the comparison

  cfg.precoder = Precoder::kMf;  // downlink baselines mirror the MF uplink

  // The block-diagonalized system only enters at the top of the sweep: at
  // M=32 the stacked adjacent edge estimates have rank >= M (lambda=0.1
  // makes ~2/3 of users edge), the null space is empty, and the precoder
  // correctly refuses. The sweep compares plain soft reuse against full
  // reuse; the M=256 crossover check then brings in zf-mbd.
  const int antennas[] = {32, 64, 128, 256};
  std::vector<double> conv_ul, spr_ul, conv_dl, spr_dl;
  for (int m : antennas) {
    cfg.antennas_per_bs = m;
    cfg.scheme = Scheme::kConventional;
    AggregateReport conv = run_experiment(cfg).report;
    cfg.scheme = Scheme::kSoftReuse;
    AggregateReport spr = run_experiment(cfg).report;
    conv_ul.push_back(conv.ul_cell_throughput);
    spr_ul.push_back(spr.ul_cell_throughput);
    conv_dl.push_back(conv.dl_cell_throughput);
    spr_dl.push_back(spr.dl_cell_throughput);
    std::printf(
        "  M=%-4d UL(mf): conv %.3f spr %.3f | DL(mf): conv %.3f spr %.3f\n",
        m, conv_ul.back(), spr_ul.back(), conv_dl.back(), spr_dl.back());
  }
  expect(spr_ul[0] < conv_ul[0], "UL: spr below conventional at M=32");
  bool ul_shrink = true, dl_shrink = true;
  for (int i = 1; i < 4; ++i) {
    if (conv_ul[i] - spr_ul[i] >= conv_ul[i - 1] - spr_ul[i - 1])
      ul_shrink = false;
    if (conv_dl[i] - spr_dl[i] >= conv_dl[i - 1] - spr_dl[i - 1])
      dl_shrink = false;
  }
  std::printf("  UL gap:");
  for (int i = 0; i < 4; ++i)
    std::printf(" %.3f (ratio %.3f)", conv_ul[i] - spr_ul[i],
                spr_ul[i] / conv_ul[i]);
  std::printf("\n  DL gap:");
  for (int i = 0; i < 4; ++i)
    std::printf(" %.3f (ratio %.3f)", conv_dl[i] - spr_dl[i],
                spr_dl[i] / conv_dl[i]);
  std::printf("\n");
  expect(ul_shrink, "UL: conventional-spr gap strictly shrinking over M");
  expect(dl_shrink, "DL: conventional-spr gap strictly shrinking over M");

  cfg.antennas_per_bs = 256;
  cfg.scheme = Scheme::kSoftReuse;
  cfg.precoder = Precoder::kZfMbd;
  AggregateReport mbd = run_experiment(cfg).report;
  std::printf("  M=256  DL spr+zf-mbd %.3f vs conv %.3f\n",
              mbd.dl_cell_throughput, conv_dl[3]);
  expect(mbd.dl_cell_throughput >= conv_dl[3],
         "DL: spr + zf-mbd at least conventional at M=256");
  return g_all_ok;
}

// ---- 8: downlink rate CDFs with and without block diagonalization ------

bool criterion_8() {
  ScenarioConfig cfg = base_config();
  cfg.scheme = Scheme::kSoftReuse;
  cfg.detector = Detector::kMf;
  cfg.trials = 200;

  cfg.precoder = Precoder::kMf;
  ExperimentResult plain = run_experiment(cfg);
  cfg.precoder = Precoder::kMfMbd;
  ExperimentResult mf_mbd = run_experiment(cfg);
  cfg.precoder = Precoder::kZfMbd;
  ExperimentResult zf_mbd = run_experiment(cfg);

  auto rate = [](const UserRecord& r) { return r.dl_rate; };
  std::vector<double> plain_edge = collect(plain.records, kEdgeOnly, rate);
  std::vector<double> mbd_edge = collect(mf_mbd.records, kEdgeOnly, rate);

  bool dominated = true;
  for (double q = 0.1; q <= 0.91; q += 0.1) {
    if (quantile(mbd_edge, q) < quantile(plain_edge, q)) dominated = false;
  }
  expect(dominated,
         "edge DL rate CDF with mbd dominates spr-only (deciles 0.1..0.9)");

  double c_plain = median_of(collect(plain.records, kCenterOnly, rate));
  double c_mbd = median_of(collect(mf_mbd.records, kCenterOnly, rate));
  std::printf("  center median DL rate: spr-only %.3f, mf-mbd %.3f\n", c_plain,
              c_mbd);
  expect(c_mbd >= 0.85 * c_plain, "center median drop below 15% with mbd");

  double e_mf = median_of(mbd_edge);
  double e_zf = median_of(collect(zf_mbd.records, kEdgeOnly, rate));
  std::printf("  edge median DL rate: mf-mbd %.3f, zf-mbd %.3f\n", e_mf, e_zf);
  expect_range(e_zf - e_mf, 0.2, 0.6,
               "edge median DL rate gap zf-mbd minus mf-mbd (bit/s/Hz)");
  return g_all_ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
    return 2;
  }
  int n = std::atoi(argv[1]);
  static const struct {
    bool (*fn)();
    const char* title;
  } table[] = {
      {criterion_1, "property suite"},
      {criterion_2, "edge SINR converges to the contamination limit"},
      {criterion_3, "soft reuse cuts edge estimation error"},
      {criterion_4, "zf over mf SINR gap per class"},
      {criterion_5, "zf over mf per-user rate gap"},
      {criterion_6, "throughput detector gap and overhead penalty"},
      {criterion_7, "throughput trends over antenna count"},
      {criterion_8, "block diagonalization lifts edge DL rates"},
  };
  if (n < 1 || n > 8) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
    return 2;
  }
  bool pass = table[n - 1].fn();
  std::printf("ACCEPTANCE %d %s: %s\n", n, pass ? "PASS" : "FAIL",
              table[n - 1].title);
  return pass ? 0 : 1;
}
