#pragma once

#include <vector>

#include "sprsim/types.hpp"

namespace sprsim {

// Center/edge split of one cell's users from their serving-link gains.
// threshold = lambda / K * sum_k beta_k^2; center iff beta_k^2 > threshold
// (ties go to edge).
struct CellGrouping {
  double threshold = 0.0;
  std::vector<bool> is_center;
  int center_count = 0;
  int edge_count = 0;
};

CellGrouping classify_users(const VecD& serving_beta, double lambda);

// Pilot-sequence budgets over a cooperating set of cells:
//   k_cs : full-reuse budget, max_i K_i
//   k_c  : shared center rows, max_i K_{i,c}
//   k_e  : per-cell edge rows, sum_i K_{i,e}
//   k_spr: k_c + k_e
//   k_os : fully orthogonal, sum_i K_i
struct PilotBudgets {
  int k_cs = 0;
  int k_c = 0;
  int k_e = 0;
  int k_spr = 0;
  int k_os = 0;
};

PilotBudgets pilot_budgets(const std::vector<CellGrouping>& cooperating);

}  // namespace sprsim
