#include "slora/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace slora {

double noise_floor_dbm(const LinkBudgetParams& params) {
  if (params.bandwidth_hz <= 0.0) {
    throw std::domain_error("noise_floor_dbm: bandwidth must be positive");
  }
  return params.noise_psd_dbm_hz + 10.0 * std::log10(params.bandwidth_hz) +
         params.noise_figure_db;
}

double path_loss_db(double distance_m, int floor, int walls,
                    const LinkBudgetParams& params,
                    std::uint64_t* clamp_counter) {
  double d = distance_m;
  if (d < params.reference_distance_m) {
    d = params.reference_distance_m;
    if (clamp_counter != nullptr) {
      ++*clamp_counter;
    }
  }
  const double log_term = 10.0 * params.path_loss_exponent *
                          std::log10(d / params.reference_distance_m);
  const double wall_term = params.wall_loss_db * static_cast<double>(walls);
  const double floor_term =
      params.floor_gain_db * static_cast<double>(floor - 1);
  return params.reference_loss_db + log_term + wall_term + floor_term;
}

double rx_snr_db(double tx_power_dbm, double loss_db, double shadow_db,
                 const LinkBudgetParams& params) {
  return tx_power_dbm - loss_db - shadow_db - noise_floor_dbm(params);
}

double rx_snr_db(Rng& rng, double tx_power_dbm, double loss_db,
                 const LinkBudgetParams& params) {
  const double shadow = rng.normal(0.0, params.shadowing_sigma_db);
  return rx_snr_db(tx_power_dbm, loss_db, shadow, params);
}

}  // namespace slora
