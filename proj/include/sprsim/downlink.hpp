#pragma once

#include <vector>

#include "sprsim/channel.hpp"
#include "sprsim/types.hpp"

namespace sprsim {

// Downlink SINR for every user of `cell` when all base stations transmit
// simultaneously. precoders[j] is the normalized antennas x K_j matrix used
// by base station j; the signal travels over the reciprocal channel, so user
// k of cell i hears h[j][i].col(k)^T * precoders[j] from station j.
VecD dl_sinr_cell(const ChannelSet& ch, int cell,
                  const std::vector<MatC>& precoders, double dl_power,
                  double noise_variance);

}  // namespace sprsim
