#pragma once

#include <cstdint>

#include "slora/rng.hpp"

namespace slora {

struct LinkBudgetParams {
  double tx_power_dbm = 14.0;
  double noise_figure_db = 6.0;
  double noise_psd_dbm_hz = -174.0;
  double bandwidth_hz = 125000.0;
  double shadowing_sigma_db = 7.8;
  double gw_height_m = 15.0;
  // Log-distance urban defaults measured for LoRa deployments. The reference
  // loss is the dominant calibration knob for absolute link budgets; relative
  // MAC comparisons are insensitive to it.
  double reference_loss_db = 127.41;
  double reference_distance_m = 40.0;
  double path_loss_exponent = 2.08;
  double wall_loss_db = 5.0;    // per internal wall
  double floor_gain_db = -2.0;  // per floor above ground (height gain)
  double floor_height_m = 3.0;
};

// Thermal noise floor: PSD + 10*log10(BW) + NF.
double noise_floor_dbm(const LinkBudgetParams& params);

// Deterministic loss: log-distance term plus wall penetration plus the
// per-floor elevation gain. Distances inside the reference distance are
// clamped to it; the optional counter records how often that happened.
double path_loss_db(double distance_m, int floor, int walls,
                    const LinkBudgetParams& params,
                    std::uint64_t* clamp_counter = nullptr);

// SNR with an explicit shadowing value (dB), for callers that manage the
// shadowing stream themselves.
double rx_snr_db(double tx_power_dbm, double loss_db, double shadow_db,
                 const LinkBudgetParams& params);

// SNR with lognormal shadowing drawn from rng, redrawn per call.
double rx_snr_db(Rng& rng, double tx_power_dbm, double loss_db,
                 const LinkBudgetParams& params);

}  // namespace slora
