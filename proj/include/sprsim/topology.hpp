#pragma once

#include <random>
#include <vector>

#include "sprsim/types.hpp"

namespace sprsim {

// Hexagonal-lattice cell layout. Flat-topped hexagons of circumradius
// `radius`, neighboring base stations sqrt(3)*radius apart. Cell 0 sits at the
// origin; further cells are indexed ring by ring, counter-clockwise. The walk
// start of each ring is fixed so that (index mod 7) colors the 19-cell layout
// with no two adjacent cells sharing a color.
struct Layout {
  double radius = 0.0;
  std::vector<Vec2> bs;
  std::vector<std::vector<int>> adjacent;  // sorted; centers sqrt(3)*R apart
  std::vector<int> pilot_class;            // reuse class per cell
  int cluster_size = 0;                    // cooperating cells = [0, cluster_size)
};

Layout build_layout(int total_cells, double radius);

bool inside_hexagon(const Vec2& p, const Vec2& center, double radius);

struct NetworkRealization {
  std::vector<int> users_per_cell;
  std::vector<std::vector<Vec2>> user_pos;  // [cell][user]
  // dist[j](i, k): distance from user k of cell j to base station i.
  std::vector<MatD> dist;
};

// Uniform drops over each cell's hexagon, rejecting closer than
// `min_user_distance` to the serving base station. Per-cell user counts are
// uniform on [k_min, k_max].
NetworkRealization drop_users(const Layout& layout, int k_min, int k_max,
                              double min_user_distance, std::mt19937_64& rng);

}  // namespace sprsim
