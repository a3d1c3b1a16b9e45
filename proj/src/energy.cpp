#include "slora/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace slora {

PowerProfile PowerProfile::from_currents(double i_tx_a, double i_sleep_a,
                                         double i_rx_fm_a, double i_idle_fm_a,
                                         double vdd_v, double t_on_s,
                                         double t_ct_s, double u_ct_s,
                                         double gamma_max) {
  if (vdd_v <= 0.0 || i_tx_a < 0.0 || i_sleep_a < 0.0 || i_rx_fm_a < 0.0 ||
      i_idle_fm_a < 0.0) {
    throw std::invalid_argument("PowerProfile: bad electrical parameters");
  }
  PowerProfile p;
  p.p_tx_lora_w = i_tx_a * vdd_v;
  p.p_sleep_lora_w = i_sleep_a * vdd_v;
  p.p_rx_fm_w = i_rx_fm_a * vdd_v;
  p.p_idle_fm_w = i_idle_fm_a * vdd_v;
  p.vdd_v = vdd_v;
  p.t_on_s = t_on_s;
  p.t_ct_s = t_ct_s;
  p.u_ct_s = u_ct_s;
  p.gamma_max = gamma_max;
  return p;
}

void EnergyLedger::add(RadioState state, double duration_s, double power_w) {
  const auto idx = static_cast<std::size_t>(state);
  state_time_s[idx] += duration_s;
  state_energy_j[idx] += duration_s * power_w;
}

void EnergyLedger::merge(const EnergyLedger& other) {
  for (std::size_t i = 0; i < state_time_s.size(); ++i) {
    state_time_s[i] += other.state_time_s[i];
    state_energy_j[i] += other.state_energy_j[i];
  }
  bits_delivered += other.bits_delivered;
}

double EnergyLedger::total_energy_j() const {
  double total = 0.0;
  for (double e : state_energy_j) {
    total += e;
  }
  return total;
}

double EnergyLedger::lora_time_s() const {
  return state_time_s[static_cast<std::size_t>(RadioState::LoraTx)] +
         state_time_s[static_cast<std::size_t>(RadioState::LoraSleep)];
}

double EnergyLedger::fm_time_s() const {
  return state_time_s[static_cast<std::size_t>(RadioState::FmRx)] +
         state_time_s[static_cast<std::size_t>(RadioState::FmIdle)];
}

ListenWindows fm_listen_durations(double t_tx_s, double gamma,
                                  const PowerProfile& profile) {
  if (t_tx_s <= 0.0 || gamma < 0.0) {
    throw std::invalid_argument("fm_listen_durations: bad interval or drift");
  }
  const double t_rx1 = profile.t_on_s + profile.t_ct_s + t_tx_s * gamma +
                       3.0 / std::sqrt(2.0) * profile.u_ct_s;
  const double t_rx2 = profile.t_on_s + profile.t_ct_s + 3.0 * profile.u_ct_s;
  return ListenWindows{t_rx1, t_rx2};
}

void accumulate_interval(EnergyLedger& ledger, MacMode mode, double t_tx_s,
                         double toa_s, double gamma,
                         const PowerProfile& profile) {
  if (toa_s < 0.0 || toa_s > t_tx_s) {
    throw std::invalid_argument("accumulate_interval: airtime outside interval");
  }
  ledger.add(RadioState::LoraTx, toa_s, profile.p_tx_lora_w);
  ledger.add(RadioState::LoraSleep, t_tx_s - toa_s, profile.p_sleep_lora_w);
  if (mode == MacMode::Slotted) {
    const ListenWindows listen =
        fm_listen_durations(t_tx_s, std::abs(gamma), profile);
    const double listening = listen.t_rx1_s + listen.t_rx2_s;
    if (listening > t_tx_s) {
      throw std::invalid_argument(
          "accumulate_interval: listen windows exceed the interval");
    }
    ledger.add(RadioState::FmRx, listening, profile.p_rx_fm_w);
    ledger.add(RadioState::FmIdle, t_tx_s - listening, profile.p_idle_fm_w);
  }
}

double per_interval_energy_j(MacMode mode, double t_tx_s, double toa_s,
                             double gamma, const PowerProfile& profile) {
  EnergyLedger ledger;
  accumulate_interval(ledger, mode, t_tx_s, toa_s, gamma, profile);
  return ledger.total_energy_j();
}

double energy_efficiency_bits_per_joule(const EnergyLedger& ledger) {
  const double total = ledger.total_energy_j();
  if (total <= 0.0) {
    throw std::domain_error(
        "energy_efficiency: undefined without accumulated energy");
  }
  return static_cast<double>(ledger.bits_delivered) / total;
}

}  // namespace slora
