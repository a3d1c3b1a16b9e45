#include "slora/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "slora/timing.hpp"

namespace slora {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view value, std::string_view key) {
  std::string v(trim(value));
  if (v == "inf" || v == "+inf") {
    return std::numeric_limits<double>::infinity();
  }
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config: bad number for " + std::string(key));
  }
  if (pos != v.size()) {
    throw ConfigError("config: trailing junk after number for " +
                      std::string(key));
  }
  return out;
}

long long parse_int(std::string_view value, std::string_view key) {
  const double d = parse_double(value, key);
  const auto i = static_cast<long long>(std::llround(d));
  if (static_cast<double>(i) != d) {
    throw ConfigError("config: expected an integer for " + std::string(key));
  }
  return i;
}

bool parse_bool(std::string_view value, std::string_view key) {
  const std::string v(trim(value));
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: expected a boolean for " + std::string(key));
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view value, std::string_view key,
                          Parse parse_one) {
  std::vector<T> out;
  std::size_t start = 0;
  const std::string v(value);
  while (start <= v.size()) {
    const std::size_t comma = v.find(',', start);
    const std::string_view item =
        trim(std::string_view(v).substr(start, comma - start));
    if (item.empty()) {
      throw ConfigError("config: empty list element in " + std::string(key));
    }
    out.push_back(parse_one(item, key));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_double_list(std::string_view value,
                                      std::string_view key) {
  return parse_list<double>(value, key, parse_double);
}

std::vector<int> parse_int_list(std::string_view value, std::string_view key) {
  return parse_list<int>(value, key, [](std::string_view v,
                                        std::string_view k) {
    return static_cast<int>(parse_int(v, k));
  });
}

std::string format_double(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T>
std::string format_list(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    if constexpr (std::is_same_v<T, double>) {
      out += format_double(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

}  // namespace

const char* run_mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Aloha:
      return "aloha";
    case RunMode::Slotted:
      return "slotted";
    case RunMode::Paired:
      return "paired";
  }
  return "unknown";
}

double SimConfig::derived_u_t0s_s() const {
  if (u_t0s_s.has_value()) {
    return *u_t0s_s;
  }
  return ct_detection_uncertainty(mu_delta_ct_s, sigma_delta_ct_s);
}

bool SimConfig::ldro_enabled(int sf) const {
  switch (ldro) {
    case LdroMode::On:
      return true;
    case LdroMode::Off:
      return false;
    case LdroMode::Auto:
      // mandated once the symbol time reaches 16.384 ms
      return symbol_time_s(sf, bandwidth_hz) >= 16.384e-3;
  }
  return false;
}

SimConfig parse_config_text(std::string_view text) {
  SimConfig cfg;
  std::set<std::string> seen;

  const auto set_double = [](double& field) {
    return [&field](std::string_view v, std::string_view k) {
      field = parse_double(v, k);
    };
  };
  const auto set_int = [](int& field) {
    return [&field](std::string_view v, std::string_view k) {
      field = static_cast<int>(parse_int(v, k));
    };
  };
  const auto set_bool = [](bool& field) {
    return [&field](std::string_view v, std::string_view k) {
      field = parse_bool(v, k);
    };
  };

  using Setter = std::function<void(std::string_view, std::string_view)>;
  const std::map<std::string, Setter> setters = {
      {"n_list",
       [&cfg](std::string_view v, std::string_view k) {
         cfg.n_list = parse_int_list(v, k);
       }},
      {"region_inner_m", set_double(cfg.region_inner_m)},
      {"region_outer_m", set_double(cfg.region_outer_m)},
      {"gw_height_m", set_double(cfg.gw_height_m)},
      {"floor_min", set_int(cfg.floor_min)},
      {"floor_max", set_int(cfg.floor_max)},
      {"walls_min", set_int(cfg.walls_min)},
      {"walls_max", set_int(cfg.walls_max)},
      {"floor_height_m", set_double(cfg.floor_height_m)},
      {"bandwidth_hz", set_double(cfg.bandwidth_hz)},
      {"carrier_mhz", set_double(cfg.carrier_mhz)},
      {"preamble_symbols", set_int(cfg.preamble_symbols)},
      {"coding_rate_denom", set_int(cfg.coding_rate_denom)},
      {"explicit_header", set_bool(cfg.explicit_header)},
      {"crc", set_bool(cfg.crc)},
      {"ldro",
       [&cfg](std::string_view v, std::string_view) {
         const std::string s(trim(v));
         if (s == "auto") {
           cfg.ldro = LdroMode::Auto;
         } else if (s == "on") {
           cfg.ldro = LdroMode::On;
         } else if (s == "off") {
           cfg.ldro = LdroMode::Off;
         } else {
           throw ConfigError("config: ldro must be auto, on or off");
         }
       }},
      {"sf_list",
       [&cfg](std::string_view v, std::string_view k) {
         cfg.sf_list = parse_int_list(v, k);
       }},
      {"sir_threshold_db", set_double(cfg.sir_threshold_db)},
      {"preamble_survival_symbols", set_int(cfg.preamble_survival_symbols)},
      {"tx_power_dbm", set_double(cfg.tx_power_dbm)},
      {"noise_figure_db", set_double(cfg.noise_figure_db)},
      {"noise_psd_dbm_hz", set_double(cfg.noise_psd_dbm_hz)},
      {"shadowing_sigma_db", set_double(cfg.shadowing_sigma_db)},
      {"shadowing_per_device", set_bool(cfg.shadowing_per_device)},
      {"reference_loss_db", set_double(cfg.reference_loss_db)},
      {"reference_distance_m", set_double(cfg.reference_distance_m)},
      {"path_loss_exponent", set_double(cfg.path_loss_exponent)},
      {"wall_loss_db", set_double(cfg.wall_loss_db)},
      {"floor_gain_db", set_double(cfg.floor_gain_db)},
      {"t_tx_list_s",
       [&cfg](std::string_view v, std::string_view k) {
         cfg.t_tx_list_s = parse_double_list(v, k);
       }},
      {"t_sync_s", set_double(cfg.t_sync_s)},
      {"t_g0_s", set_double(cfg.t_g0_s)},
      {"delta_s", set_double(cfg.delta_s)},
      {"clock_f0_hz", set_double(cfg.clock_f0_hz)},
      {"gamma_max_ppm", set_double(cfg.gamma_max_ppm)},
      {"u_tx_s", set_double(cfg.u_tx_s)},
      {"mu_delta_ct_s", set_double(cfg.mu_delta_ct_s)},
      {"sigma_delta_ct_s", set_double(cfg.sigma_delta_ct_s)},
      {"u_t0s_s",
       [&cfg](std::string_view v, std::string_view k) {
         cfg.u_t0s_s = parse_double(v, k);
       }},
      {"i_tx_lora_a", set_double(cfg.i_tx_lora_a)},
      {"i_sleep_lora_a", set_double(cfg.i_sleep_lora_a)},
      {"i_rx_fm_a", set_double(cfg.i_rx_fm_a)},
      {"i_idle_fm_a", set_double(cfg.i_idle_fm_a)},
      {"vdd_v", set_double(cfg.vdd_v)},
      {"t_on_s", set_double(cfg.t_on_s)},
      {"t_ct_s", set_double(cfg.t_ct_s)},
      {"u_ct_s", set_double(cfg.u_ct_s)},
      {"count_full_phy_payload_bits", set_bool(cfg.count_full_phy_payload_bits)},
      {"mode",
       [&cfg](std::string_view v, std::string_view) {
         const std::string s(trim(v));
         if (s == "aloha") {
           cfg.mode = RunMode::Aloha;
         } else if (s == "slotted") {
           cfg.mode = RunMode::Slotted;
         } else if (s == "paired") {
           cfg.mode = RunMode::Paired;
         } else {
           throw ConfigError("config: mode must be aloha, slotted or paired");
         }
       }},
      {"budget_messages",
       [&cfg](std::string_view v, std::string_view k) {
         const long long b = parse_int(v, k);
         if (b < 0) throw ConfigError("config: budget_messages negative");
         cfg.budget_messages = static_cast<std::uint64_t>(b);
       }},
      {"runs_per_cell", set_int(cfg.runs_per_cell)},
      {"seed",
       [&cfg](std::string_view v, std::string_view k) {
         const long long s = parse_int(v, k);
         if (s < 0) throw ConfigError("config: seed negative");
         cfg.seed = static_cast<std::uint64_t>(s);
       }},
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    std::string_view line = raw;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config: line " + std::to_string(line_no) +
                        " is not of the form key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError("config: duplicate key " + key);
    }

    // per-SF keyed entries
    if (key.rfind("payload_sf", 0) == 0) {
      const int sf = static_cast<int>(parse_int(key.substr(10), key));
      cfg.payloads[sf] = parse_int_list(value, key);
      continue;
    }
    if (key.rfind("snr_threshold_sf", 0) == 0 &&
        key.size() > 19 && key.substr(key.size() - 3) == "_db") {
      const int sf = static_cast<int>(
          parse_int(key.substr(16, key.size() - 19), key));
      cfg.snr_thresholds_db[sf] = parse_double(value, key);
      continue;
    }

    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("config: unknown key " + key);
    }
    it->second(value, key);
  }
  return cfg;
}

SimConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("config: cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void validate(const SimConfig& cfg) {
  if (cfg.n_list.empty()) throw ConfigError("config: n_list is empty");
  for (int n : cfg.n_list) {
    if (n < 1) throw ConfigError("config: device count must be >= 1");
  }
  if (cfg.region_inner_m < 0.0 || cfg.region_inner_m >= cfg.region_outer_m) {
    throw ConfigError("config: need 0 <= region_inner_m < region_outer_m");
  }
  if (cfg.floor_min < 1 || cfg.floor_min > cfg.floor_max) {
    throw ConfigError("config: bad floor range");
  }
  if (cfg.walls_min < 0 || cfg.walls_min > cfg.walls_max) {
    throw ConfigError("config: bad wall range");
  }
  if (cfg.floor_height_m <= 0.0) {
    throw ConfigError("config: floor_height_m must be positive");
  }
  if (cfg.bandwidth_hz <= 0.0) {
    throw ConfigError("config: bandwidth_hz must be positive");
  }
  if (cfg.sf_list.empty()) throw ConfigError("config: sf_list is empty");
  for (int sf : cfg.sf_list) {
    if (sf < 7 || sf > 12) {
      throw ConfigError("config: spreading factor out of 7..12");
    }
    if (cfg.snr_thresholds_db.find(sf) == cfg.snr_thresholds_db.end()) {
      throw ConfigError("config: no snr_threshold_sf" + std::to_string(sf) +
                        "_db configured");
    }
    const auto payloads_it = cfg.payloads.find(sf);
    if (payloads_it == cfg.payloads.end() || payloads_it->second.empty()) {
      throw ConfigError("config: no payload list for sf" + std::to_string(sf));
    }
    for (int payload : payloads_it->second) {
      FrameParams frame{sf,
                        cfg.bandwidth_hz,
                        cfg.coding_rate_denom,
                        cfg.preamble_symbols,
                        payload,
                        cfg.explicit_header,
                        cfg.crc,
                        cfg.ldro_enabled(sf)};
      try {
        validate_frame(frame);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("config: sf") + std::to_string(sf) +
                          " payload " + std::to_string(payload) + ": " +
                          e.what());
      }
    }
  }
  if (cfg.preamble_survival_symbols < 0 ||
      cfg.preamble_survival_symbols > cfg.preamble_symbols) {
    throw ConfigError(
        "config: preamble_survival_symbols outside 0..preamble_symbols");
  }
  if (cfg.sir_threshold_db < 0.0) {
    throw ConfigError("config: sir_threshold_db must be >= 0");
  }
  if (cfg.shadowing_sigma_db < 0.0) {
    throw ConfigError("config: shadowing_sigma_db must be >= 0");
  }
  if (cfg.reference_distance_m <= 0.0 || cfg.path_loss_exponent <= 0.0) {
    throw ConfigError("config: bad path loss parameters");
  }
  if (cfg.t_tx_list_s.empty()) {
    throw ConfigError("config: t_tx_list_s is empty");
  }
  if (cfg.t_sync_s <= 0.0) {
    throw ConfigError("config: t_sync_s must be positive");
  }
  for (double t_tx : cfg.t_tx_list_s) {
    const double ratio = t_tx / cfg.t_sync_s;
    if (t_tx <= 0.0 || std::abs(ratio - std::round(ratio)) > 1e-9 ||
        std::llround(ratio) < 1) {
      throw ConfigError(
          "config: every t_tx must be a positive multiple of t_sync_s");
    }
    if (cfg.delta_s < 0.0 || cfg.delta_s >= t_tx) {
      throw ConfigError("config: delta_s outside [0, t_tx)");
    }
  }
  if (cfg.t_g0_s < 0.0) throw ConfigError("config: t_g0_s must be >= 0");
  if (cfg.clock_f0_hz <= 0.0) {
    throw ConfigError("config: clock_f0_hz must be positive");
  }
  if (cfg.gamma_max_ppm < 0.0 || cfg.gamma_max() >= 1e-3) {
    throw ConfigError("config: gamma_max_ppm outside the clock model range");
  }
  if (cfg.u_tx_s < 0.0 || cfg.mu_delta_ct_s < 0.0 ||
      cfg.sigma_delta_ct_s < 0.0 ||
      (cfg.u_t0s_s.has_value() && *cfg.u_t0s_s < 0.0)) {
    throw ConfigError("config: uncertainties must be >= 0");
  }
  if (cfg.vdd_v <= 0.0 || cfg.i_tx_lora_a < 0.0 || cfg.i_sleep_lora_a < 0.0 ||
      cfg.i_rx_fm_a < 0.0 || cfg.i_idle_fm_a < 0.0) {
    throw ConfigError("config: bad electrical parameters");
  }
  if (cfg.t_on_s < 0.0 || cfg.t_ct_s < 0.0 || cfg.u_ct_s < 0.0) {
    throw ConfigError("config: bad radio switching times");
  }
  if (cfg.runs_per_cell < 1) {
    throw ConfigError("config: runs_per_cell must be >= 1");
  }
}

std::string canonical_text(const SimConfig& cfg) {
  std::ostringstream out;
  out << "bandwidth_hz = " << format_double(cfg.bandwidth_hz) << "\n"
      << "budget_messages = " << cfg.budget_messages << "\n"
      << "carrier_mhz = " << format_double(cfg.carrier_mhz) << "\n"
      << "clock_f0_hz = " << format_double(cfg.clock_f0_hz) << "\n"
      << "coding_rate_denom = " << cfg.coding_rate_denom << "\n"
      << "count_full_phy_payload_bits = "
      << (cfg.count_full_phy_payload_bits ? "true" : "false") << "\n"
      << "crc = " << (cfg.crc ? "true" : "false") << "\n"
      << "delta_s = " << format_double(cfg.delta_s) << "\n"
      << "explicit_header = " << (cfg.explicit_header ? "true" : "false")
      << "\n"
      << "floor_gain_db = " << format_double(cfg.floor_gain_db) << "\n"
      << "floor_height_m = " << format_double(cfg.floor_height_m) << "\n"
      << "floor_max = " << cfg.floor_max << "\n"
      << "floor_min = " << cfg.floor_min << "\n"
      << "gamma_max_ppm = " << format_double(cfg.gamma_max_ppm) << "\n"
      << "gw_height_m = " << format_double(cfg.gw_height_m) << "\n"
      << "i_idle_fm_a = " << format_double(cfg.i_idle_fm_a) << "\n"
      << "i_rx_fm_a = " << format_double(cfg.i_rx_fm_a) << "\n"
      << "i_sleep_lora_a = " << format_double(cfg.i_sleep_lora_a) << "\n"
      << "i_tx_lora_a = " << format_double(cfg.i_tx_lora_a) << "\n"
      << "ldro = "
      << (cfg.ldro == LdroMode::Auto ? "auto"
                                     : (cfg.ldro == LdroMode::On ? "on" : "off"))
      << "\n"
      << "mode = " << run_mode_name(cfg.mode) << "\n"
      << "mu_delta_ct_s = " << format_double(cfg.mu_delta_ct_s) << "\n"
      << "n_list = " << format_list(cfg.n_list) << "\n"
      << "noise_figure_db = " << format_double(cfg.noise_figure_db) << "\n"
      << "noise_psd_dbm_hz = " << format_double(cfg.noise_psd_dbm_hz) << "\n"
      << "path_loss_exponent = " << format_double(cfg.path_loss_exponent)
      << "\n";
  for (const auto& [sf, list] : cfg.payloads) {
    out << "payload_sf" << sf << " = " << format_list(list) << "\n";
  }
  out << "preamble_survival_symbols = " << cfg.preamble_survival_symbols
      << "\n"
      << "preamble_symbols = " << cfg.preamble_symbols << "\n"
      << "reference_distance_m = " << format_double(cfg.reference_distance_m)
      << "\n"
      << "reference_loss_db = " << format_double(cfg.reference_loss_db) << "\n"
      << "region_inner_m = " << format_double(cfg.region_inner_m) << "\n"
      << "region_outer_m = " << format_double(cfg.region_outer_m) << "\n"
      << "runs_per_cell = " << cfg.runs_per_cell << "\n"
      << "seed = " << cfg.seed << "\n"
      << "sf_list = " << format_list(cfg.sf_list) << "\n"
      << "shadowing_per_device = "
      << (cfg.shadowing_per_device ? "true" : "false") << "\n"
      << "shadowing_sigma_db = " << format_double(cfg.shadowing_sigma_db)
      << "\n"
      << "sigma_delta_ct_s = " << format_double(cfg.sigma_delta_ct_s) << "\n"
      << "sir_threshold_db = " << format_double(cfg.sir_threshold_db) << "\n";
  for (const auto& [sf, thr] : cfg.snr_thresholds_db) {
    out << "snr_threshold_sf" << sf << "_db = " << format_double(thr) << "\n";
  }
  out << "t_ct_s = " << format_double(cfg.t_ct_s) << "\n"
      << "t_g0_s = " << format_double(cfg.t_g0_s) << "\n"
      << "t_on_s = " << format_double(cfg.t_on_s) << "\n"
      << "t_sync_s = " << format_double(cfg.t_sync_s) << "\n"
      << "t_tx_list_s = " << format_list(cfg.t_tx_list_s) << "\n"
      << "tx_power_dbm = " << format_double(cfg.tx_power_dbm) << "\n"
      << "u_ct_s = " << format_double(cfg.u_ct_s) << "\n"
      << "u_tx_s = " << format_double(cfg.u_tx_s) << "\n";
  if (cfg.u_t0s_s.has_value()) {
    out << "u_t0s_s = " << format_double(*cfg.u_t0s_s) << "\n";
  }
  out << "vdd_v = " << format_double(cfg.vdd_v) << "\n"
      << "wall_loss_db = " << format_double(cfg.wall_loss_db) << "\n"
      << "walls_max = " << cfg.walls_max << "\n"
      << "walls_min = " << cfg.walls_min << "\n";
  return out.str();
}

namespace {

std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 1469598103934665603ull) {
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::uint64_t config_hash(const SimConfig& config) {
  return fnv1a(canonical_text(config));
}

ScenarioParams CellConfig::scenario_params() const {
  ScenarioParams p;
  p.n_devices = n_devices;
  p.region_inner_m = base.region_inner_m;
  p.region_outer_m = base.region_outer_m;
  p.floor_min = base.floor_min;
  p.floor_max = base.floor_max;
  p.walls_min = base.walls_min;
  p.walls_max = base.walls_max;
  p.floor_height_m = base.floor_height_m;
  p.gamma_max = base.gamma_max();
  return p;
}

LinkBudgetParams CellConfig::link_params() const {
  LinkBudgetParams p;
  p.tx_power_dbm = base.tx_power_dbm;
  p.noise_figure_db = base.noise_figure_db;
  p.noise_psd_dbm_hz = base.noise_psd_dbm_hz;
  p.bandwidth_hz = base.bandwidth_hz;
  p.shadowing_sigma_db = base.shadowing_sigma_db;
  p.gw_height_m = base.gw_height_m;
  p.reference_loss_db = base.reference_loss_db;
  p.reference_distance_m = base.reference_distance_m;
  p.path_loss_exponent = base.path_loss_exponent;
  p.wall_loss_db = base.wall_loss_db;
  p.floor_gain_db = base.floor_gain_db;
  p.floor_height_m = base.floor_height_m;
  return p;
}

FrameParams CellConfig::frame_params() const {
  return FrameParams{sf,
                     base.bandwidth_hz,
                     base.coding_rate_denom,
                     base.preamble_symbols,
                     payload_bytes,
                     base.explicit_header,
                     base.crc,
                     base.ldro_enabled(sf)};
}

PowerProfile CellConfig::power_profile() const {
  return PowerProfile::from_currents(
      base.i_tx_lora_a, base.i_sleep_lora_a, base.i_rx_fm_a, base.i_idle_fm_a,
      base.vdd_v, base.t_on_s, base.t_ct_s, base.u_ct_s, base.gamma_max());
}

SnrThresholds CellConfig::snr_thresholds() const {
  SnrThresholds t;
  t.by_sf.fill(std::numeric_limits<double>::quiet_NaN());
  for (const auto& [sf_key, thr] : base.snr_thresholds_db) {
    if (sf_key >= 7 && sf_key <= 12) {
      t.by_sf[static_cast<std::size_t>(sf_key - 7)] = thr;
    }
  }
  return t;
}

std::uint64_t CellConfig::pair_key() const {
  std::string text = canonical_text(base);
  char cell[128];
  std::snprintf(cell, sizeof(cell), "cell %d %d %.17g %d %llu", sf,
                payload_bytes, t_tx_s, n_devices,
                static_cast<unsigned long long>(budget_messages));
  return fnv1a(cell, fnv1a(text));
}

std::uint64_t CellConfig::cell_hash() const {
  const std::uint64_t key = pair_key();
  return fnv1a(mac_mode_name(mode), key);
}

CellConfig make_cell(const SimConfig& config, int sf, int payload_bytes,
                     double t_tx_s, int n_devices, MacMode mode) {
  CellConfig cell;
  cell.base = config;
  cell.sf = sf;
  cell.payload_bytes = payload_bytes;
  cell.t_tx_s = t_tx_s;
  cell.n_devices = n_devices;
  cell.mode = mode;
  cell.budget_messages = config.budget_messages;
  return cell;
}

}  // namespace slora
