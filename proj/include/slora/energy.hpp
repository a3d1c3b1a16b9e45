#pragma once

#include <array>
#include <cstdint>

#include "slora/mac.hpp"

namespace slora {

// Measured power figures for the LoRa transceiver and the broadcast (FM-RDS)
// receiver. Powers are derived from currents at the supply voltage so the
// pair stays consistent by construction.
struct PowerProfile {
  double p_tx_lora_w = 44e-3 * 3.3;      // 145.2 mW
  double p_sleep_lora_w = 100e-9 * 3.3;  // 0.33 uW
  double p_rx_fm_w = 1.2e-3 * 3.3;       // 3.96 mW
  double p_idle_fm_w = 120e-9 * 3.3;     // 0.396 uW
  double vdd_v = 3.3;
  double t_on_s = 1e-3;     // radio switch-on
  double t_ct_s = 86.7e-3;  // clock-group duration
  double u_ct_s = 62e-3;    // jitter of the broadcast group period
  double gamma_max = 20e-6;

  static PowerProfile from_currents(double i_tx_a, double i_sleep_a,
                                    double i_rx_fm_a, double i_idle_fm_a,
                                    double vdd_v, double t_on_s, double t_ct_s,
                                    double u_ct_s, double gamma_max);
};

enum class RadioState : std::uint8_t {
  LoraTx = 0,
  LoraSleep = 1,
  FmRx = 2,
  FmIdle = 3,
};

inline constexpr int kRadioStateCount = 4;

struct EnergyLedger {
  std::array<double, kRadioStateCount> state_time_s{};
  std::array<double, kRadioStateCount> state_energy_j{};
  std::uint64_t bits_delivered = 0;

  void add(RadioState state, double duration_s, double power_w);
  void merge(const EnergyLedger& other);
  double total_energy_j() const;
  double lora_time_s() const;  // transmit + sleep
  double fm_time_s() const;    // listen + idle

  bool operator==(const EnergyLedger&) const = default;
};

struct ListenWindows {
  double t_rx1_s;  // first clock-group: must also absorb accumulated drift
  double t_rx2_s;  // second clock-group: clock already adjusted
};

// Listen windows per transmission interval:
//   T_RX1 = T_ON + T_CT + T_TX * gamma + (3/sqrt(2)) * u_CT
//   T_RX2 = T_ON + T_CT + 3 * u_CT
// gamma is the device's drift magnitude; the window must cover drift of
// either sign.
ListenWindows fm_listen_durations(double t_tx_s, double gamma,
                                  const PowerProfile& profile);

// Accounts one transmission interval into the ledger. The LoRa radio is
// either transmitting or sleeping; the slotted mode additionally runs the FM
// receiver for both listen windows and idles it otherwise.
void accumulate_interval(EnergyLedger& ledger, MacMode mode, double t_tx_s,
                         double toa_s, double gamma,
                         const PowerProfile& profile);

// Scalar view of the same accounting.
double per_interval_energy_j(MacMode mode, double t_tx_s, double toa_s,
                             double gamma, const PowerProfile& profile);

// Delivered payload bits per joule.
double energy_efficiency_bits_per_joule(const EnergyLedger& ledger);

}  // namespace slora
