#pragma once

#include <vector>

#include "sprsim/config.hpp"
#include "sprsim/grouping.hpp"
#include "sprsim/types.hpp"

namespace sprsim {

// First `rows` rows of the tau-point DFT matrix scaled by 1/sqrt(tau):
// rows are exactly orthonormal, so Phi * Phi^H = I.
MatC dft_pilot_matrix(int rows, int tau);

// Which pilot row every user transmits on. Budgets are computed over the
// cooperating cluster; cells outside it reuse rows according to their reuse
// class and may degrade (demoted/unpiloted) when their draw exceeds the
// cluster-sized budget. Cells inside the cluster never degrade.
struct PilotPlan {
  Scheme scheme = Scheme::kConventional;
  int tau = 0;
  MatC phi;  // tau x tau
  std::vector<std::vector<int>> row;  // row[cell][user]; -1 = no pilot
  int k_c = 0;                        // center rows are [0, k_c)  (soft reuse)
  std::vector<int> block_start;       // per reuse class            (soft reuse)
  std::vector<int> block_size;
  PilotBudgets budgets;
  double budget_ratio = 1.0;  // tau / k_cs; scales the training overhead
  int demoted = 0;    // users assigned outside their natural row region
  int unpiloted = 0;  // users left without any row

  int n_cells() const { return static_cast<int>(row.size()); }
};

PilotPlan assign_conventional(const std::vector<CellGrouping>& cells,
                              const PilotBudgets& budgets);

PilotPlan assign_spr(const std::vector<CellGrouping>& cells,
                     const std::vector<int>& pilot_class,
                     const std::vector<std::vector<int>>& adjacent,
                     int cluster_size, const PilotBudgets& budgets);

PilotPlan assign_orthogonal(const std::vector<CellGrouping>& cells,
                            const std::vector<int>& pilot_class,
                            const std::vector<std::vector<int>>& adjacent,
                            int cluster_size, const PilotBudgets& budgets);

// K_j x tau matrix whose k-th row is user k's transmitted sequence (zero row
// when the user has no pilot).
MatC cell_pilot_rows(const PilotPlan& plan, int cell);

}  // namespace sprsim
