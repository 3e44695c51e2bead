#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sprsim/types.hpp"

namespace sprsim {

enum class Scheme { kConventional, kSoftReuse, kOrthogonal };
enum class Detector { kMf, kZf };
enum class Precoder { kMf, kZf, kMfMbd, kZfMbd };

Scheme parse_scheme(const std::string& s);
Detector parse_detector(const std::string& s);
Precoder parse_precoder(const std::string& s);
std::string to_string(Scheme s);
std::string to_string(Detector d);
std::string to_string(Precoder p);
bool is_mbd(Precoder p);

// All powers in mW, distances in meters, noise density in dBm/Hz.
struct ScenarioConfig {
  int total_cells = 19;
  std::vector<int> measured_cells;  // empty = the central cooperating cluster
  int antennas_per_bs = 128;
  int users_per_cell_min = 8;
  int users_per_cell_max = 10;
  double cell_radius = 500.0;
  double min_user_distance = 30.0;
  double pathloss_exponent = 3.0;
  double shadow_std = 8.0;               // dB
  double pilot_power = 10.0;             // 10 dBm
  double ul_power = 10.0;                // 10 dBm
  double dl_power = 15.848931924611133;  // 12 dBm
  double noise_density = -174.0;
  double bandwidth = 1.0e7;
  double carrier_frequency = 2.0e9;  // informational; propagation model is
                                     // normalized at the cell radius
  double overhead = 0.1;             // training-overhead fraction mu
  double grouping_param = 0.1;       // lambda in the center/edge threshold
  Scheme scheme = Scheme::kConventional;
  Detector detector = Detector::kMf;
  Precoder precoder = Precoder::kMf;
  std::uint64_t seed = 1;
  int trials = 50;
  int inner_fading_draws = 1;

  double noise_variance_mw() const;  // thermal noise over `bandwidth`
  std::vector<int> resolved_measured_cells() const;
  void validate() const;
};

// Flat key=value file, '#' comments. Unknown keys are an error.
ScenarioConfig load_config_file(const std::string& path);
// Set one field from its key name; shared by the file loader and CLI overrides.
void apply_key_value(ScenarioConfig& cfg, const std::string& key,
                     const std::string& value);
// key=value dump of every resolved field (metadata sidecar body).
std::string serialize_config(const ScenarioConfig& cfg);

}  // namespace sprsim
