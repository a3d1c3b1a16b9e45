#pragma once

#include "slora/rng.hpp"

namespace slora {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// First-order affine clock: C(t) = (alpha + beta*t) * T0. Used for unit-level
// verification of the clock algebra; the event loop never ticks per-device
// clocks, it perturbs transmission instants with the combined uncertainty
// instead.
struct SkmClock {
  double alpha;          // initial offset count, ticks
  double beta;           // actual rate, ticks/s
  double tick_period_s;  // T0 = 1/F0 for a nominal clock
  double nominal_hz;     // F0

  // Local clock value observed at true time t.
  double reading(double t) const { return (alpha + beta * t) * tick_period_s; }

  // gamma = (beta - F0) * T0
  double drift() const { return (beta - nominal_hz) * tick_period_s; }

  // theta(t) = C(t) - t
  double offset(double t) const { return reading(t) - t; }

  // V(td) = beta * (td - t0) * T0: elapsed local time since the timer was
  // restarted at true time t0.
  double elapsed_since_sync(double t0, double td) const;

  // Clock with a given fractional drift and zero initial offset.
  static SkmClock with_drift(double nominal_hz, double gamma,
                             double alpha = 0.0);
};

// Moments of the propagation delay for devices placed area-uniformly on an
// annulus (radii in metres): the delay density is triangular on
// [r_inner/v, r_outer/v].
struct PropagationStats {
  double mu_s;
  double sigma_s;
  double u_s;  // sqrt(mu^2 + sigma^2); the mean is not known a priori, so it
               // contributes to the uncertainty instead of being calibrated out
};

PropagationStats propagation_stats(double r_inner_m, double r_outer_m);

// Standard uncertainty of detecting one broadcast clock-time group, from the
// mean and standard deviation of the two-receiver arrival-time difference:
// u_t0s = sqrt((mu^2 + sigma^2) / 2).
double ct_detection_uncertainty(double mu_dct_s, double sigma_dct_s);

// Worst-case transmission-time uncertainty after syntonizing over k
// synchronization intervals:
//   u_V = (1 + gamma) * sqrt((4k^2 + 2) * T0^2/3 + (4k^2 + 1) * u_t0s^2)
// composed from the tick-quantization term T0/sqrt(3), the sync-event
// detection term u_t0s (counted at both ends of the measured interval), and
// the rate estimate propagated over k intervals.
double transmission_clock_uncertainty(int k, double t0_s, double u_t0s_s,
                                      double gamma);

// Large-k, coarse-detection limit of the same quantity: u_V ~= 2k * u_t0s.
double transmission_clock_uncertainty_simplified(int k, double u_t0s_s);

// Full decomposition of the timing error budget. All values in seconds except
// u_beta (ticks/s).
struct UncertaintyBudget {
  double u_tx_s = 0;        // transceiver latency jitter (Type A, measured)
  double u_pd_s = 0;        // propagation delay contribution
  double u_v_s = 0;         // local clock + synchronization contribution
  double u_combined_s = 0;  // sqrt(u_tx^2 + u_pd^2 + u_v^2)

  // intermediate terms, kept visible for verification
  double u_td_s = 0;        // deadline quantization, T0/sqrt(3)
  double u_t0q_s = 0;       // sync-instant quantization, T0/sqrt(3)
  double u_t0s_s = 0;       // sync-event detection
  double u_t0_s = 0;        // sqrt(u_t0q^2 + u_t0s^2)
  double u_tsync_s = 0;     // sync-interval estimate, 2 * u_t0
  double u_beta_ticks = 0;  // rate estimate, beta/T_SYNC * u_TSYNC

  bool operator==(const UncertaintyBudget&) const = default;
};

// Quadrature combination of the three independent error groups.
UncertaintyBudget combined_uncertainty(double u_tx_s, double u_pd_s,
                                       double u_v_s);

// Builds the complete budget for a slotted configuration: k sync intervals
// per transmission interval, tick period t0_s, detection uncertainty u_t0s_s,
// worst-case fractional drift gamma.
UncertaintyBudget build_uncertainty_budget(int k, double t0_s, double u_t0s_s,
                                           double gamma, double t_sync_s,
                                           double u_tx_s, double u_pd_s);

// Zero-mean Gaussian draw with standard deviation u. The combined uncertainty
// is only defined up to its second moment; Gaussian is the maximum-entropy
// choice for it.
double sample_timing_offset(Rng& rng, double u_s);

}  // namespace slora
