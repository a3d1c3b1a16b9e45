#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slora/channel.hpp"
#include "slora/energy.hpp"
#include "slora/mac.hpp"
#include "slora/phy.hpp"
#include "slora/scenario.hpp"

namespace slora {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RunMode : std::uint8_t { Aloha = 0, Slotted = 1, Paired = 2 };

const char* run_mode_name(RunMode mode);

enum class LdroMode : std::uint8_t { Auto = 0, On = 1, Off = 2 };

// Full experiment description. Defaults reproduce the reference evaluation
// grid; every value can be overridden from a flat key = value text file.
struct SimConfig {
  // scenario
  std::vector<int> n_list{5000, 10000};
  double region_inner_m = 0.0;
  double region_outer_m = 1500.0;
  double gw_height_m = 15.0;
  int floor_min = 1;
  int floor_max = 4;
  int walls_min = 0;
  int walls_max = 3;
  double floor_height_m = 3.0;

  // frame / phy
  double bandwidth_hz = 125000.0;
  double carrier_mhz = 868.1;
  int preamble_symbols = 8;
  int coding_rate_denom = 8;
  bool explicit_header = true;
  bool crc = true;
  LdroMode ldro = LdroMode::Auto;
  std::vector<int> sf_list{7, 9, 12};
  std::map<int, std::vector<int>> payloads{
      {7, {10, 51, 221}}, {9, {10, 51, 115}}, {12, {10, 51}}};
  std::map<int, double> snr_thresholds_db{{7, -6.0}, {9, -12.0}, {12, -20.0}};
  double sir_threshold_db = 1.0;
  int preamble_survival_symbols = 5;

  // channel
  double tx_power_dbm = 14.0;
  double noise_figure_db = 6.0;
  double noise_psd_dbm_hz = -174.0;
  double shadowing_sigma_db = 7.8;
  bool shadowing_per_device = false;  // redraw per transmission by default
  double reference_loss_db = 127.41;
  double reference_distance_m = 40.0;
  double path_loss_exponent = 2.08;
  double wall_loss_db = 5.0;
  double floor_gain_db = -2.0;

  // mac
  std::vector<double> t_tx_list_s{60.0, 300.0, 600.0};
  double t_sync_s = 60.0;
  double t_g0_s = 3e-3;
  double delta_s = 0.0;

  // timing
  double clock_f0_hz = 32768.0;
  double gamma_max_ppm = 20.0;
  double u_tx_s = 1.4e-6;
  double mu_delta_ct_s = 0.41e-3;
  double sigma_delta_ct_s = 0.24e-3;
  std::optional<double> u_t0s_s;  // derived from the two values above if unset

  // energy
  double i_tx_lora_a = 44e-3;
  double i_sleep_lora_a = 100e-9;
  double i_rx_fm_a = 1.2e-3;
  double i_idle_fm_a = 120e-9;
  double vdd_v = 3.3;
  double t_on_s = 1e-3;
  double t_ct_s = 86.7e-3;
  double u_ct_s = 62e-3;
  bool count_full_phy_payload_bits = false;

  // experiment
  RunMode mode = RunMode::Paired;
  std::uint64_t budget_messages = 200000;
  int runs_per_cell = 10;
  std::uint64_t seed = 1;

  double gamma_max() const { return gamma_max_ppm * 1e-6; }
  double tick_period_s() const { return 1.0 / clock_f0_hz; }
  double derived_u_t0s_s() const;
  bool ldro_enabled(int sf) const;
};

// Parses `key = value` lines; '#' starts a full-line comment. Unknown or
// duplicate keys are errors.
SimConfig parse_config_text(std::string_view text);
SimConfig parse_config_file(const std::string& path);

// Throws ConfigError describing the first violated constraint.
void validate(const SimConfig& config);

// Deterministic round-trippable rendering of every key; also the hashing
// input for run reports.
std::string canonical_text(const SimConfig& config);
std::uint64_t config_hash(const SimConfig& config);

// One grid cell resolved to a single (sf, payload, t_tx, n, mode) point.
struct CellConfig {
  SimConfig base;
  int sf = 7;
  int payload_bytes = 10;
  double t_tx_s = 60.0;
  int n_devices = 5000;
  MacMode mode = MacMode::Aloha;
  std::uint64_t budget_messages = 200000;

  ScenarioParams scenario_params() const;
  LinkBudgetParams link_params() const;
  FrameParams frame_params() const;
  PowerProfile power_profile() const;
  SnrThresholds snr_thresholds() const;

  std::uint64_t cell_hash() const;  // includes the MAC mode
  std::uint64_t pair_key() const;   // excludes it; equal for paired runs
};

CellConfig make_cell(const SimConfig& config, int sf, int payload_bytes,
                     double t_tx_s, int n_devices, MacMode mode);

}  // namespace slora
