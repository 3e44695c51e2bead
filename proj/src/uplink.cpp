#include "sprsim/uplink.hpp"

#include <limits>
#include <string>

#include "sprsim/solve.hpp"

namespace sprsim {

MatC detector_rows(const MatC& hhat, Detector det, int cell) {
  if (det == Detector::kMf) return hhat.adjoint();
  const std::string ctx = "zero-forcing detector, cell " + std::to_string(cell);
  // Near/far users make the raw Gram arbitrarily ill-scaled; equilibrate the
  // columns so the rank test sees angles, not powers.
  VecD norms = hhat.colwise().norm().transpose();
  if (norms.minCoeff() <= 0.0)
    throw SingularMatrixError(ctx + ": zero estimate column");
  VecD inv = norms.cwiseInverse();
  MatC hn = hhat * inv.asDiagonal();
  MatC rows = solve_hermitian_pd(hn.adjoint() * hn, hn.adjoint(), ctx);
  return inv.asDiagonal() * rows;
}

VecD ul_sinr_cell(const MatC& det_rows, const ChannelSet& ch, int cell,
                  double ul_power, double noise_variance) {
  const int n = static_cast<int>(ch.h.size());
  const int k_i = static_cast<int>(det_rows.rows());
  VecD signal(k_i), total(k_i);
  total.setZero();
  for (int j = 0; j < n; ++j) {
    const MatC p = det_rows * ch.h[cell][j];  // K_i x K_j
    total += p.cwiseAbs2().rowwise().sum();
    if (j == cell)
      for (int k = 0; k < k_i; ++k) signal(k) = std::norm(p(k, k));
  }
  VecD out(k_i);
  for (int k = 0; k < k_i; ++k) {
    double interf = total(k) - signal(k);
    double noise = noise_variance * det_rows.row(k).squaredNorm();
    out(k) = ul_power * signal(k) / (ul_power * interf + noise);
  }
  return out;
}

VecD pc_limit_cell(const LargeScale& ls, const PilotPlan& plan, int cell) {
  const int n = plan.n_cells();
  const int k_i = static_cast<int>(plan.row[cell].size());
  VecD out(k_i);
  for (int k = 0; k < k_i; ++k) {
    const int r = plan.row[cell][k];
    double own = ls.beta[cell](cell, k);
    double denom = 0.0;
    if (r >= 0)
      for (int j = 0; j < n; ++j) {
        if (j == cell) continue;
        for (std::size_t k2 = 0; k2 < plan.row[j].size(); ++k2)
          if (plan.row[j][k2] == r) {
            double b = ls.beta[j](cell, static_cast<int>(k2));
            denom += b * b;
          }
      }
    out(k) = denom > 0.0 ? own * own / denom
                         : std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace sprsim
