#pragma once

#include "sprsim/channel.hpp"
#include "sprsim/config.hpp"
#include "sprsim/pilots.hpp"
#include "sprsim/types.hpp"

namespace sprsim {

// Detection matrix for one cell, one row per served user (K x M), built from
// the serving-channel estimate: matched filter rows are hhat^H, zero-forcing
// rows are (hhat^H hhat)^{-1} hhat^H.
MatC detector_rows(const MatC& hhat, Detector det, int cell);

// Post-detection SINR of every user of `cell` against the true channels:
//   rho_u |w h_own|^2 / (rho_u * sum_other |w h|^2 + sigma^2 ||w||^2).
// The interference sum runs over every other user of every cell.
VecD ul_sinr_cell(const MatC& det_rows, const ChannelSet& ch, int cell,
                  double ul_power, double noise_variance);

// Large-antenna uplink SINR limit of each user of `cell` under its pilot
// assignment: serving beta^2 over the summed beta^2 of every same-row user in
// other cells. +inf when nobody shares the row (the SINR then grows with M
// instead of saturating).
VecD pc_limit_cell(const LargeScale& ls, const PilotPlan& plan, int cell);

}  // namespace sprsim
