#include "sprsim/downlink.hpp"

namespace sprsim {

VecD dl_sinr_cell(const ChannelSet& ch, int cell,
                  const std::vector<MatC>& precoders, double dl_power,
                  double noise_variance) {
  const int n_cells = static_cast<int>(ch.h.size());
  const int k_i = static_cast<int>(ch.h[cell][cell].cols());
  VecD signal = VecD::Zero(k_i);
  VecD total = VecD::Zero(k_i);
  for (int j = 0; j < n_cells; ++j) {
    MatC heard = ch.h[j][cell].transpose() * precoders[j];  // k_i x K_j
    total += heard.cwiseAbs2().rowwise().sum();
    if (j == cell) signal = heard.diagonal().cwiseAbs2();
  }
  VecD sinr(k_i);
  for (int k = 0; k < k_i; ++k) {
    sinr(k) = dl_power * signal(k) /
              (dl_power * (total(k) - signal(k)) + noise_variance);
  }
  return sinr;
}

}  // namespace sprsim
