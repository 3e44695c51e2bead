#include "sprsim/grouping.hpp"

#include <algorithm>

namespace sprsim {

CellGrouping classify_users(const VecD& serving_beta, double lambda) {
  if (lambda < 0) throw ConfigError("grouping parameter must be >= 0");
  CellGrouping g;
  const int k = static_cast<int>(serving_beta.size());
  if (k == 0) return g;
  const VecD b2 = serving_beta.array().square();
  g.threshold = lambda / k * b2.sum();
  g.is_center.resize(k);
  for (int i = 0; i < k; ++i) {
    g.is_center[i] = b2(i) > g.threshold;
    if (g.is_center[i])
      ++g.center_count;
    else
      ++g.edge_count;
  }
  return g;
}

PilotBudgets pilot_budgets(const std::vector<CellGrouping>& cooperating) {
  PilotBudgets b;
  for (const auto& g : cooperating) {
    int k_i = g.center_count + g.edge_count;
    b.k_cs = std::max(b.k_cs, k_i);
    b.k_c = std::max(b.k_c, g.center_count);
    b.k_e += g.edge_count;
    b.k_os += k_i;
  }
  b.k_spr = b.k_c + b.k_e;
  return b;
}

}  // namespace sprsim
