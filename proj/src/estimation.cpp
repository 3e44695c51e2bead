#include "sprsim/estimation.hpp"

#include <cmath>

namespace sprsim {

MatC receive_pilots(const ChannelSet& ch, const PilotPlan& plan, int bs,
                    double pilot_power, double noise_variance,
                    std::mt19937_64& rng) {
  const int n = static_cast<int>(ch.h.size());
  const int m = ch.antennas;
  if (plan.n_cells() != n)
    throw ConfigError("pilot plan and channel set disagree on cell count");
  MatC y = MatC::Zero(m, plan.tau);
  for (int j = 0; j < n; ++j) y.noalias() += ch.h[bs][j] * cell_pilot_rows(plan, j);
  y *= std::sqrt(pilot_power);
  if (noise_variance > 0.0) {
    const double s = std::sqrt(noise_variance / 2.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < plan.tau; ++t)
      for (int i = 0; i < m; ++i) y(i, t) += cplx(s * gauss(rng), s * gauss(rng));
  }
  return y;
}

MatC estimate_cell(const MatC& y, const PilotPlan& plan, int cell,
                   double pilot_power) {
  const auto& rows = plan.row.at(cell);
  const double inv = 1.0 / std::sqrt(pilot_power);
  MatC hhat = MatC::Zero(y.rows(), static_cast<int>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k] >= 0)
      hhat.col(static_cast<int>(k)) =
          inv * (y * plan.phi.row(rows[k]).adjoint());
  return hhat;
}

MatC estimate_intercell(const MatC& y, const PilotPlan& plan, int own_class,
                        double pilot_power) {
  if (plan.scheme != Scheme::kSoftReuse)
    throw ConfigError("inter-cell edge estimates need a soft-reuse plan");
  const int n_classes = static_cast<int>(plan.block_size.size());
  int rows = 0;
  for (int b = 0; b < n_classes; ++b)
    if (b != own_class) rows += plan.block_size[b];
  MatC a(rows, y.rows());
  const double inv = 1.0 / std::sqrt(pilot_power);
  int off = 0;
  for (int b = 0; b < n_classes; ++b) {
    if (b == own_class || plan.block_size[b] == 0) continue;
    MatC block =
        inv * (y * plan.phi.middleRows(plan.block_start[b], plan.block_size[b])
                       .adjoint());
    a.middleRows(off, plan.block_size[b]) = block.transpose();
    off += plan.block_size[b];
  }
  return a;
}

VecD per_user_mse(const MatC& hhat, const MatC& h) {
  if (hhat.rows() != h.rows() || hhat.cols() != h.cols())
    throw ConfigError("estimate/channel shape mismatch");
  VecD out(h.cols());
  for (int k = 0; k < h.cols(); ++k)
    out(k) = (hhat.col(k) - h.col(k)).squaredNorm() / h.col(k).squaredNorm();
  return out;
}

}  // namespace sprsim
