#pragma once

#include <random>

#include "sprsim/channel.hpp"
#include "sprsim/pilots.hpp"
#include "sprsim/types.hpp"

namespace sprsim {

// Received training block at base station `bs` (M x tau):
//   Y = sqrt(pilot_power) * sum_j H[bs][j] * S_j + N,
// S_j the per-user sequence rows of cell j, N entries CN(0, noise_variance),
// drawn antenna-major per symbol.
MatC receive_pilots(const ChannelSet& ch, const PilotPlan& plan, int bs,
                    double pilot_power, double noise_variance,
                    std::mt19937_64& rng);

// Least-squares correlation estimate of the serving channels of `cell`
// (M x K colum-per-user). Column k correlates against user k's own row, so
// it sums the true channel, every same-row channel from other cells, and
// scaled noise. Users without a pilot get a zero column.
MatC estimate_cell(const MatC& y, const PilotPlan& plan, int cell,
                   double pilot_power);

// Stacked edge-channel estimates seen by a cell of reuse class `own_class`:
// one correlation block per other class, transposed and stacked in ascending
// class order. Rows = sum of other blocks' sizes. Soft-reuse plans only.
MatC estimate_intercell(const MatC& y, const PilotPlan& plan, int own_class,
                        double pilot_power);

// Per-user normalized estimation error ||hhat_k - h_k||^2 / ||h_k||^2.
VecD per_user_mse(const MatC& hhat, const MatC& h);

}  // namespace sprsim
