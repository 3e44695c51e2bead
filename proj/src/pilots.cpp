#include "sprsim/pilots.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sprsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

int cell_users(const CellGrouping& g) { return g.center_count + g.edge_count; }

// Reuse classes whose rows cell `j` must stay away from: its own and those of
// every geometrically adjacent cell.
std::set<int> forbidden_classes(int j, const std::vector<int>& pilot_class,
                                const std::vector<std::vector<int>>& adjacent) {
  std::set<int> out{pilot_class[j]};
  for (int a : adjacent[j]) out.insert(pilot_class[a]);
  return out;
}

}  // namespace

MatC dft_pilot_matrix(int rows, int tau) {
  if (tau < 1 || rows < 0 || rows > tau)
    throw ConfigError("pilot matrix needs 0 <= rows <= tau, tau >= 1");
  MatC phi(rows, tau);
  const double scale = 1.0 / std::sqrt(static_cast<double>(tau));
  for (int m = 0; m < rows; ++m)
    for (int t = 0; t < tau; ++t) {
      double ang = -2.0 * kPi * m * t / tau;
      phi(m, t) = scale * cplx(std::cos(ang), std::sin(ang));
    }
  return phi;
}

PilotPlan assign_conventional(const std::vector<CellGrouping>& cells,
                              const PilotBudgets& budgets) {
  PilotPlan plan;
  plan.scheme = Scheme::kConventional;
  plan.budgets = budgets;
  plan.tau = budgets.k_cs;
  plan.phi = dft_pilot_matrix(plan.tau, plan.tau);
  plan.budget_ratio = 1.0;
  plan.row.resize(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    int k_j = cell_users(cells[j]);
    plan.row[j].resize(k_j);
    for (int k = 0; k < k_j; ++k) {
      if (k < plan.tau) {
        plan.row[j][k] = k;
      } else {
        plan.row[j][k] = -1;  // outer cell drew more users than the budget
        ++plan.unpiloted;
      }
    }
  }
  return plan;
}

PilotPlan assign_spr(const std::vector<CellGrouping>& cells,
                     const std::vector<int>& pilot_class,
                     const std::vector<std::vector<int>>& adjacent,
                     int cluster_size, const PilotBudgets& budgets) {
  const int n = static_cast<int>(cells.size());
  if (static_cast<int>(pilot_class.size()) != n ||
      static_cast<int>(adjacent.size()) != n || cluster_size < 1 ||
      cluster_size > n)
    throw ConfigError("inconsistent cell structure for pilot assignment");

  PilotPlan plan;
  plan.scheme = Scheme::kSoftReuse;
  plan.budgets = budgets;
  plan.tau = budgets.k_spr;
  plan.phi = dft_pilot_matrix(plan.tau, plan.tau);
  plan.budget_ratio =
      static_cast<double>(plan.tau) / static_cast<double>(budgets.k_cs);
  plan.k_c = budgets.k_c;

  // One edge block per reuse class, sized by the cluster cell that owns the
  // class. Cluster cells carry classes 0..cluster_size-1 in index order.
  plan.block_start.resize(cluster_size);
  plan.block_size.resize(cluster_size);
  int off = plan.k_c;
  for (int b = 0; b < cluster_size; ++b) {
    if (pilot_class[b] != b)
      throw ConfigError("cluster cells must carry classes 0..L-1 in order");
    plan.block_start[b] = off;
    plan.block_size[b] = cells[b].edge_count;
    off += cells[b].edge_count;
  }

  plan.row.resize(n);
  std::vector<std::set<int>> used(n);
  std::vector<std::vector<int>> pending(n);
  for (int j = 0; j < n; ++j) {
    const int k_j = cell_users(cells[j]);
    const int cls = pilot_class[j];
    plan.row[j].assign(k_j, -1);
    int next_center = 0, next_edge = 0;
    for (int k = 0; k < k_j; ++k) {
      if (cells[j].is_center[k]) {
        if (next_center < plan.k_c) {
          plan.row[j][k] = next_center++;
          used[j].insert(plan.row[j][k]);
        } else {
          pending[j].push_back(k);
        }
      } else {
        if (cls < cluster_size && next_edge < plan.block_size[cls]) {
          plan.row[j][k] = plan.block_start[cls] + next_edge++;
          used[j].insert(plan.row[j][k]);
        } else {
          pending[j].push_back(k);
        }
      }
    }
  }
  // Overflow ladder (outer cells only), after every natural row is known:
  // free center rows first, then edge-block rows of non-adjacent classes that
  // no geometric neighbor occupies, else no pilot. Checking neighbors by
  // actual rows (not just class) keeps the edge-protection invariant when two
  // adjacent outer cells spill into the same foreign block.
  for (int j = 0; j < n; ++j) {
    if (pending[j].empty()) continue;
    const std::set<int> banned = forbidden_classes(j, pilot_class, adjacent);
    auto neighbors_clear = [&](int r) {
      for (int a : adjacent[j])
        if (used[a].count(r)) return false;
      return true;
    };
    for (int k : pending[j]) {
      int got = -1;
      for (int r = 0; r < plan.k_c && got < 0; ++r)
        if (!used[j].count(r)) got = r;
      for (int b = 0; b < cluster_size && got < 0; ++b) {
        if (banned.count(b)) continue;
        for (int r = plan.block_start[b];
             r < plan.block_start[b] + plan.block_size[b] && got < 0; ++r)
          if (!used[j].count(r) && neighbors_clear(r)) got = r;
      }
      if (got >= 0) {
        plan.row[j][k] = got;
        used[j].insert(got);
        ++plan.demoted;
      } else {
        ++plan.unpiloted;
      }
    }
  }
  return plan;
}

PilotPlan assign_orthogonal(const std::vector<CellGrouping>& cells,
                            const std::vector<int>& pilot_class,
                            const std::vector<std::vector<int>>& adjacent,
                            int cluster_size, const PilotBudgets& budgets) {
  const int n = static_cast<int>(cells.size());
  if (static_cast<int>(pilot_class.size()) != n ||
      static_cast<int>(adjacent.size()) != n || cluster_size < 1 ||
      cluster_size > n)
    throw ConfigError("inconsistent cell structure for pilot assignment");

  PilotPlan plan;
  plan.scheme = Scheme::kOrthogonal;
  plan.budgets = budgets;
  plan.tau = budgets.k_os;
  plan.phi = dft_pilot_matrix(plan.tau, plan.tau);
  plan.budget_ratio =
      static_cast<double>(plan.tau) / static_cast<double>(budgets.k_cs);

  // Cluster cell b owns a contiguous slice; outer cells reuse the slice of
  // their class (the layout guarantees the owner is never adjacent).
  std::vector<int> slice_start(cluster_size), slice_size(cluster_size);
  int off = 0;
  for (int b = 0; b < cluster_size; ++b) {
    slice_start[b] = off;
    slice_size[b] = cell_users(cells[b]);
    off += slice_size[b];
  }

  plan.row.resize(n);
  std::vector<std::set<int>> used(n);
  std::vector<std::vector<int>> pending(n);
  for (int j = 0; j < n; ++j) {
    const int k_j = cell_users(cells[j]);
    const int cls = pilot_class[j];
    plan.row[j].assign(k_j, -1);
    for (int k = 0; k < k_j; ++k) {
      if (cls < cluster_size && k < slice_size[cls]) {
        plan.row[j][k] = slice_start[cls] + k;
        used[j].insert(plan.row[j][k]);
      } else {
        pending[j].push_back(k);
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (pending[j].empty()) continue;
    const std::set<int> banned = forbidden_classes(j, pilot_class, adjacent);
    auto neighbors_clear = [&](int r) {
      for (int a : adjacent[j])
        if (used[a].count(r)) return false;
      return true;
    };
    for (int k : pending[j]) {
      int got = -1;
      for (int b = 0; b < cluster_size && got < 0; ++b) {
        if (banned.count(b)) continue;
        for (int r = slice_start[b]; r < slice_start[b] + slice_size[b] && got < 0;
             ++r)
          if (!used[j].count(r) && neighbors_clear(r)) got = r;
      }
      if (got >= 0) {
        plan.row[j][k] = got;
        used[j].insert(got);
        ++plan.demoted;
      } else {
        ++plan.unpiloted;
      }
    }
  }
  return plan;
}

MatC cell_pilot_rows(const PilotPlan& plan, int cell) {
  const auto& rows = plan.row.at(cell);
  MatC out = MatC::Zero(static_cast<int>(rows.size()), plan.tau);
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k] >= 0) out.row(static_cast<int>(k)) = plan.phi.row(rows[k]);
  return out;
}

}  // namespace sprsim
