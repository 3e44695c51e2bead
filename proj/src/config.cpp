#include "sprsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sprsim/types.hpp"

namespace sprsim {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': " + v);
  }
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for '" + key + "': " + v);
  }
}

std::vector<int> parse_int_list(const std::string& key, const std::string& v) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(static_cast<int>(parse_int(key, item)));
  }
  return out;
}

}  // namespace

Scheme parse_scheme(const std::string& s) {
  if (s == "conventional") return Scheme::kConventional;
  if (s == "spr") return Scheme::kSoftReuse;
  if (s == "orthogonal") return Scheme::kOrthogonal;
  throw ConfigError("unknown scheme '" + s +
                    "' (expected conventional|spr|orthogonal)");
}

Detector parse_detector(const std::string& s) {
  if (s == "mf") return Detector::kMf;
  if (s == "zf") return Detector::kZf;
  throw ConfigError("unknown detector '" + s + "' (expected mf|zf)");
}

Precoder parse_precoder(const std::string& s) {
  if (s == "mf") return Precoder::kMf;
  if (s == "zf") return Precoder::kZf;
  if (s == "mf-mbd") return Precoder::kMfMbd;
  if (s == "zf-mbd") return Precoder::kZfMbd;
  throw ConfigError("unknown precoder '" + s +
                    "' (expected mf|zf|mf-mbd|zf-mbd)");
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::kConventional: return "conventional";
    case Scheme::kSoftReuse: return "spr";
    case Scheme::kOrthogonal: return "orthogonal";
  }
  return "?";
}

std::string to_string(Detector d) {
  return d == Detector::kMf ? "mf" : "zf";
}

std::string to_string(Precoder p) {
  switch (p) {
    case Precoder::kMf: return "mf";
    case Precoder::kZf: return "zf";
    case Precoder::kMfMbd: return "mf-mbd";
    case Precoder::kZfMbd: return "zf-mbd";
  }
  return "?";
}

bool is_mbd(Precoder p) {
  return p == Precoder::kMfMbd || p == Precoder::kZfMbd;
}

double ScenarioConfig::noise_variance_mw() const {
  return std::pow(10.0, (noise_density + 10.0 * std::log10(bandwidth)) / 10.0);
}

std::vector<int> ScenarioConfig::resolved_measured_cells() const {
  if (!measured_cells.empty()) return measured_cells;
  std::vector<int> out;
  for (int i = 0; i < std::min(total_cells, 7); ++i) out.push_back(i);
  return out;
}

void ScenarioConfig::validate() const {
  if (total_cells != 1 && total_cells != 7 && total_cells != 19)
    throw ConfigError("total_cells must be 1, 7 or 19");
  if (users_per_cell_min < 1 || users_per_cell_max < users_per_cell_min)
    throw ConfigError("need 1 <= users_per_cell_min <= users_per_cell_max");
  if (antennas_per_bs < users_per_cell_max)
    throw ConfigError("antennas_per_bs must be >= users_per_cell_max");
  if (cell_radius <= 0 || min_user_distance <= 0 ||
      min_user_distance >= cell_radius)
    throw ConfigError("need 0 < min_user_distance < cell_radius");
  if (pathloss_exponent <= 0) throw ConfigError("pathloss_exponent must be > 0");
  if (shadow_std < 0) throw ConfigError("shadow_std must be >= 0");
  if (pilot_power <= 0 || ul_power <= 0 || dl_power <= 0)
    throw ConfigError("transmit powers must be > 0 (mW)");
  if (bandwidth <= 0) throw ConfigError("bandwidth must be > 0");
  if (overhead <= 0 || overhead >= 1)
    throw ConfigError("overhead must lie in (0, 1)");
  if (grouping_param < 0) throw ConfigError("grouping_param must be >= 0");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (inner_fading_draws < 1)
    throw ConfigError("inner_fading_draws must be >= 1");
  for (int c : measured_cells)
    if (c < 0 || c >= total_cells)
      throw ConfigError("measured_cells index out of range: " +
                        std::to_string(c));
  if (is_mbd(precoder) && scheme != Scheme::kSoftReuse)
    throw ConfigError(
        "mbd precoders need the spr scheme (no separable edge pilots "
        "otherwise)");
}

void apply_key_value(ScenarioConfig& cfg, const std::string& key,
                     const std::string& value) {
  if (key == "total_cells")
    cfg.total_cells = static_cast<int>(parse_int(key, value));
  else if (key == "measured_cells")
    cfg.measured_cells = parse_int_list(key, value);
  else if (key == "antennas_per_bs")
    cfg.antennas_per_bs = static_cast<int>(parse_int(key, value));
  else if (key == "users_per_cell_min")
    cfg.users_per_cell_min = static_cast<int>(parse_int(key, value));
  else if (key == "users_per_cell_max")
    cfg.users_per_cell_max = static_cast<int>(parse_int(key, value));
  else if (key == "cell_radius")
    cfg.cell_radius = parse_double(key, value);
  else if (key == "min_user_distance")
    cfg.min_user_distance = parse_double(key, value);
  else if (key == "pathloss_exponent")
    cfg.pathloss_exponent = parse_double(key, value);
  else if (key == "shadow_std")
    cfg.shadow_std = parse_double(key, value);
  else if (key == "pilot_power")
    cfg.pilot_power = parse_double(key, value);
  else if (key == "ul_power")
    cfg.ul_power = parse_double(key, value);
  else if (key == "dl_power")
    cfg.dl_power = parse_double(key, value);
  else if (key == "noise_density")
    cfg.noise_density = parse_double(key, value);
  else if (key == "bandwidth")
    cfg.bandwidth = parse_double(key, value);
  else if (key == "carrier_frequency")
    cfg.carrier_frequency = parse_double(key, value);
  else if (key == "overhead")
    cfg.overhead = parse_double(key, value);
  else if (key == "grouping_param")
    cfg.grouping_param = parse_double(key, value);
  else if (key == "scheme")
    cfg.scheme = parse_scheme(value);
  else if (key == "detector")
    cfg.detector = parse_detector(value);
  else if (key == "precoder")
    cfg.precoder = parse_precoder(value);
  else if (key == "seed")
    cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
  else if (key == "trials")
    cfg.trials = static_cast<int>(parse_int(key, value));
  else if (key == "inner_fading_draws")
    cfg.inner_fading_draws = static_cast<int>(parse_int(key, value));
  else
    throw ConfigError("unknown config key '" + key + "'");
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  ScenarioConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key = value");
    apply_key_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "total_cells = " << cfg.total_cells << "\n";
  os << "measured_cells = ";
  auto mc = cfg.resolved_measured_cells();
  for (std::size_t i = 0; i < mc.size(); ++i)
    os << (i ? "," : "") << mc[i];
  os << "\n";
  os << "antennas_per_bs = " << cfg.antennas_per_bs << "\n";
  os << "users_per_cell_min = " << cfg.users_per_cell_min << "\n";
  os << "users_per_cell_max = " << cfg.users_per_cell_max << "\n";
  os << "cell_radius = " << cfg.cell_radius << "\n";
  os << "min_user_distance = " << cfg.min_user_distance << "\n";
  os << "pathloss_exponent = " << cfg.pathloss_exponent << "\n";
  os << "shadow_std = " << cfg.shadow_std << "\n";
  os << "pilot_power = " << cfg.pilot_power << "\n";
  os << "ul_power = " << cfg.ul_power << "\n";
  os << "dl_power = " << cfg.dl_power << "\n";
  os << "noise_density = " << cfg.noise_density << "\n";
  os << "bandwidth = " << cfg.bandwidth << "\n";
  os << "carrier_frequency = " << cfg.carrier_frequency << "\n";
  os << "overhead = " << cfg.overhead << "\n";
  os << "grouping_param = " << cfg.grouping_param << "\n";
  os << "scheme = " << to_string(cfg.scheme) << "\n";
  os << "detector = " << to_string(cfg.detector) << "\n";
  os << "precoder = " << to_string(cfg.precoder) << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "trials = " << cfg.trials << "\n";
  os << "inner_fading_draws = " << cfg.inner_fading_draws << "\n";
  return os.str();
}

}  // namespace sprsim
