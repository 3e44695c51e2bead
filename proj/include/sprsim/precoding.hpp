#pragma once

#include "sprsim/types.hpp"

namespace sprsim {

// Orthonormal basis of the null space of a stacked estimate matrix
// (rows x antennas). Rank counts singular values above
// sigma_max * max(rows, cols) * machine-eps; the basis keeps the trailing
// antennas - rank right singular vectors. An empty stack yields the identity.
struct NullSpaceBasis {
  MatC basis;  // antennas x (antennas - rank)
  VecD singular_values;
  int rank = 0;
};

NullSpaceBasis null_space(const MatC& a, int antennas);

// Hermitian idempotent projector onto the null space, basis * basis^H.
MatC projector(const NullSpaceBasis& ns);

// W is antennas x K with the gamma normalization already applied, so that
// trace(W^H W) = K.
struct PrecodeResult {
  MatC w;
  double gamma = 0.0;
};

PrecodeResult mf_precoder(const MatC& hhat);
PrecodeResult zf_precoder(const MatC& hhat, int cell);
// Block-diagonalized variants: precode inside the null space of the stacked
// neighboring-edge estimates, suppressing inter-cell interference toward
// those users.
PrecodeResult mf_mbd_precoder(const MatC& hhat, const NullSpaceBasis& ns);
PrecodeResult zf_mbd_precoder(const MatC& hhat, const NullSpaceBasis& ns,
                              int cell);

}  // namespace sprsim
