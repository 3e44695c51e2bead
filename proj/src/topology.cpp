#include "sprsim/topology.hpp"

#include <algorithm>
#include <cmath>

namespace sprsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Unit steps between neighboring cell centers (angles 30, 90, ..., 330 deg).
Vec2 lattice_dir(int i, double spacing) {
  double a = kPi / 6.0 + i * kPi / 3.0;
  return {spacing * std::cos(a), spacing * std::sin(a)};
}

// Second-ring walk offset that makes (index mod 7) a conflict-free reuse
// pattern: adjacent cells never share a class.
constexpr int kRing2Start = 9;

}  // namespace

Layout build_layout(int total_cells, double radius) {
  if (total_cells != 1 && total_cells != 7 && total_cells != 19)
    throw ConfigError("layout supports 1, 7 or 19 cells");
  if (radius <= 0) throw ConfigError("cell radius must be > 0");

  const double spacing = std::sqrt(3.0) * radius;
  Layout lay;
  lay.radius = radius;
  lay.bs.push_back({0.0, 0.0});
  if (total_cells >= 7) {
    for (int i = 0; i < 6; ++i) lay.bs.push_back(lattice_dir(i, spacing));
  }
  if (total_cells == 19) {
    // Counter-clockwise ring walk: corner 2*d[c], then one step along d[c+2].
    std::vector<Vec2> ring;
    for (int c = 0; c < 6; ++c) {
      Vec2 corner = lattice_dir(c, 2.0 * spacing);
      Vec2 step = lattice_dir((c + 2) % 6, spacing);
      ring.push_back(corner);
      ring.push_back({corner.x + step.x, corner.y + step.y});
    }
    for (int t = 0; t < 12; ++t) lay.bs.push_back(ring[(kRing2Start + t) % 12]);
  }

  const int n = static_cast<int>(lay.bs.size());
  lay.adjacent.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(distance(lay.bs[i], lay.bs[j]) - spacing) < 1e-6 * radius) {
        lay.adjacent[i].push_back(j);
        lay.adjacent[j].push_back(i);
      }
  for (auto& v : lay.adjacent) std::sort(v.begin(), v.end());

  lay.pilot_class.resize(n);
  for (int i = 0; i < n; ++i)
    lay.pilot_class[i] = (total_cells == 19) ? i % 7 : i;
  lay.cluster_size = std::min(total_cells, 7);
  return lay;
}

bool inside_hexagon(const Vec2& p, const Vec2& center, double radius) {
  const double s3 = std::sqrt(3.0);
  double dx = std::abs(p.x - center.x);
  double dy = std::abs(p.y - center.y);
  return dy <= s3 / 2.0 * radius && s3 * dx + dy <= s3 * radius;
}

NetworkRealization drop_users(const Layout& layout, int k_min, int k_max,
                              double min_user_distance, std::mt19937_64& rng) {
  if (k_min < 1 || k_max < k_min)
    throw ConfigError("need 1 <= k_min <= k_max");
  if (min_user_distance <= 0 || min_user_distance >= layout.radius)
    throw ConfigError("need 0 < min_user_distance < cell radius");

  const double r = layout.radius;
  const double ih = std::sqrt(3.0) / 2.0 * r;  // hexagon inradius
  std::uniform_int_distribution<int> count(k_min, k_max);
  std::uniform_real_distribution<double> ux(-r, r);
  std::uniform_real_distribution<double> uy(-ih, ih);

  const int n = static_cast<int>(layout.bs.size());
  NetworkRealization net;
  net.users_per_cell.resize(n);
  net.user_pos.resize(n);
  for (int j = 0; j < n; ++j) {
    int k = count(rng);
    net.users_per_cell[j] = k;
    net.user_pos[j].reserve(k);
    for (int u = 0; u < k; ++u) {
      Vec2 off;
      do {
        off = {ux(rng), uy(rng)};
      } while (!inside_hexagon(off, {0.0, 0.0}, r) ||
               std::hypot(off.x, off.y) < min_user_distance);
      net.user_pos[j].push_back(
          {layout.bs[j].x + off.x, layout.bs[j].y + off.y});
    }
  }
  net.dist.resize(n);
  for (int j = 0; j < n; ++j) {
    net.dist[j].resize(n, net.users_per_cell[j]);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < net.users_per_cell[j]; ++k)
        net.dist[j](i, k) = distance(layout.bs[i], net.user_pos[j][k]);
  }
  return net;
}

}  // namespace sprsim
