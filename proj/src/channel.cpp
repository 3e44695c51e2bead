#include "sprsim/channel.hpp"

#include <cmath>

namespace sprsim {

LargeScale large_scale(const NetworkRealization& net, double radius,
                       double pathloss_exponent, double shadow_std_db,
                       std::mt19937_64& rng) {
  const int n = static_cast<int>(net.users_per_cell.size());
  std::normal_distribution<double> gauss(0.0, 1.0);
  LargeScale ls;
  ls.beta.resize(n);
  ls.shadow_db.resize(n);
  for (int j = 0; j < n; ++j) {
    const int k_j = net.users_per_cell[j];
    ls.beta[j].resize(n, k_j);
    ls.shadow_db[j].resize(n, k_j);
    for (int k = 0; k < k_j; ++k)
      for (int i = 0; i < n; ++i) {
        double sh = shadow_std_db * gauss(rng);
        double z = std::pow(10.0, sh / 10.0);
        double r = net.dist[j](i, k);
        ls.shadow_db[j](i, k) = sh;
        ls.beta[j](i, k) = z / std::pow(r / radius, pathloss_exponent);
      }
  }
  return ls;
}

ChannelSet small_scale(const NetworkRealization& net, const LargeScale& ls,
                       int antennas, std::mt19937_64& rng) {
  const int n = static_cast<int>(net.users_per_cell.size());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ChannelSet ch;
  ch.antennas = antennas;
  ch.h.assign(n, std::vector<MatC>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ch.h[i][j].resize(antennas, net.users_per_cell[j]);
  // fixed draw order: cell, user, receiving BS, antenna
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < net.users_per_cell[j]; ++k)
      for (int i = 0; i < n; ++i) {
        const double scale = std::sqrt(ls.beta[j](i, k));
        for (int m = 0; m < antennas; ++m) {
          cplx g(gauss(rng), gauss(rng));
          ch.h[i][j](m, k) = g * inv_sqrt2 * scale;
        }
      }
  return ch;
}

}  // namespace sprsim
