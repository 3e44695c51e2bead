#pragma once

#include <random>
#include <vector>

#include "sprsim/topology.hpp"
#include "sprsim/types.hpp"

namespace sprsim {

// Large-scale link gains. beta[j](i, k) is the gain between user k of cell j
// and base station i:
//   beta = z / (r / radius)^alpha,  10*log10(z) ~ N(0, shadow_std^2),
// independent per link. Gains are normalized to 1 at distance `radius`
// (no shadowing), so absolute SNRs are optimistic; only relative comparisons
// carry meaning.
struct LargeScale {
  std::vector<MatD> beta;
  std::vector<MatD> shadow_db;  // the 10*log10(z) draws, kept for diagnostics
};

LargeScale large_scale(const NetworkRealization& net, double radius,
                       double pathloss_exponent, double shadow_std_db,
                       std::mt19937_64& rng);

// h[i][j] is M x K_j; column k is the channel from user k of cell j to the M
// antennas of base station i: h = g * sqrt(beta), g ~ CN(0, I_M), independent
// across links and redrawn every coherence block.
struct ChannelSet {
  int antennas = 0;
  std::vector<std::vector<MatC>> h;
};

ChannelSet small_scale(const NetworkRealization& net, const LargeScale& ls,
                       int antennas, std::mt19937_64& rng);

}  // namespace sprsim
