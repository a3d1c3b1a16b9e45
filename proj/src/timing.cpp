#include "slora/timing.hpp"

#include <cmath>
#include <stdexcept>

namespace slora {

double SkmClock::elapsed_since_sync(double t0, double td) const {
  if (td < t0) {
    throw std::invalid_argument("elapsed_since_sync: td precedes t0");
  }
  return beta * (td - t0) * tick_period_s;
}

SkmClock SkmClock::with_drift(double nominal_hz, double gamma, double alpha) {
  if (nominal_hz <= 0.0) {
    throw std::invalid_argument("SkmClock: nominal rate must be positive");
  }
  if (std::abs(gamma) >= 1e-3) {
    throw std::invalid_argument("SkmClock: drift out of model range");
  }
  return SkmClock{alpha, nominal_hz * (1.0 + gamma), 1.0 / nominal_hz,
                  nominal_hz};
}

PropagationStats propagation_stats(double r_inner_m, double r_outer_m) {
  if (r_inner_m < 0.0 || r_inner_m >= r_outer_m) {
    throw std::domain_error("propagation_stats: need 0 <= r_inner < r_outer");
  }
  const double rl = r_inner_m;
  const double rL = r_outer_m;
  const double v = kSpeedOfLight;
  const double mu =
      2.0 * (rL * rL + rl * rl + rL * rl) / (3.0 * (rL + rl) * v);
  const double sigma = (rL - rl) *
                       std::sqrt(rL * rL + rl * rl + 4.0 * rL * rl) /
                       (3.0 * std::sqrt(2.0) * v * (rL + rl));
  return PropagationStats{mu, sigma, std::sqrt(mu * mu + sigma * sigma)};
}

double ct_detection_uncertainty(double mu_dct_s, double sigma_dct_s) {
  return std::sqrt((mu_dct_s * mu_dct_s + sigma_dct_s * sigma_dct_s) / 2.0);
}

double transmission_clock_uncertainty(int k, double t0_s, double u_t0s_s,
                                      double gamma) {
  if (k < 1 || t0_s <= 0.0) {
    throw std::domain_error("transmission_clock_uncertainty: k >= 1, T0 > 0");
  }
  const double k2 = 4.0 * static_cast<double>(k) * static_cast<double>(k);
  const double quant = (k2 + 2.0) * t0_s * t0_s / 3.0;
  const double detect = (k2 + 1.0) * u_t0s_s * u_t0s_s;
  return (1.0 + gamma) * std::sqrt(quant + detect);
}

double transmission_clock_uncertainty_simplified(int k, double u_t0s_s) {
  return 2.0 * static_cast<double>(k) * u_t0s_s;
}

UncertaintyBudget combined_uncertainty(double u_tx_s, double u_pd_s,
                                       double u_v_s) {
  UncertaintyBudget b;
  b.u_tx_s = u_tx_s;
  b.u_pd_s = u_pd_s;
  b.u_v_s = u_v_s;
  b.u_combined_s =
      std::sqrt(u_tx_s * u_tx_s + u_pd_s * u_pd_s + u_v_s * u_v_s);
  return b;
}

UncertaintyBudget build_uncertainty_budget(int k, double t0_s, double u_t0s_s,
                                           double gamma, double t_sync_s,
                                           double u_tx_s, double u_pd_s) {
  const double u_v = transmission_clock_uncertainty(k, t0_s, u_t0s_s, gamma);
  UncertaintyBudget b = combined_uncertainty(u_tx_s, u_pd_s, u_v);
  b.u_td_s = t0_s / std::sqrt(3.0);
  b.u_t0q_s = b.u_td_s;
  b.u_t0s_s = u_t0s_s;
  b.u_t0_s = std::sqrt(b.u_t0q_s * b.u_t0q_s + u_t0s_s * u_t0s_s);
  b.u_tsync_s = 2.0 * b.u_t0_s;
  const double beta = (1.0 + gamma) / t0_s;
  b.u_beta_ticks = beta / t_sync_s * b.u_tsync_s;
  return b;
}

double sample_timing_offset(Rng& rng, double u_s) {
  if (u_s < 0.0) {
    throw std::domain_error("sample_timing_offset: negative uncertainty");
  }
  if (u_s == 0.0) {
    return 0.0;
  }
  return rng.normal(0.0, u_s);
}

}  // namespace slora
