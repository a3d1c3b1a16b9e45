#pragma once

#include <cstdint>

#include "slora/rng.hpp"

namespace slora {

enum class MacMode : std::uint8_t {
  Aloha = 0,    // plain LoRaWAN uplink: transmit anywhere in the interval
  Slotted = 1,  // S-LoRa: broadcast-synchronized slots
};

const char* mac_mode_name(MacMode mode);

// Slot plan for one transmission interval T_TX = k * T_SYNC. The contention
// window T_CW = T_TX - delta is divided into M slots of ToA + guard; the
// guard grows linearly with k because the clock-rate estimate ages over the
// whole interval.
struct SlotSchedule {
  double t_tx_s = 0.0;
  int k = 1;                // sync intervals per transmission interval
  double t_sync_s = 60.0;   // broadcast clock-group period
  double delta_s = 0.0;     // dead time for a non-integer sync count
  double toa_s = 0.0;
  double t_g_s = 0.0;       // guard per slot, k * t_g0
  double t_slot_s = 0.0;    // toa + guard
  double contention_window_s = 0.0;
  std::int64_t m_slots = 0;

  bool operator==(const SlotSchedule&) const = default;
};

double guard_time_s(int k, double t_g0_s);

// Throws std::invalid_argument when t_tx is not a positive multiple of
// t_sync or no whole slot fits in the contention window.
SlotSchedule build_schedule(double t_tx_s, double toa_s, double t_g0_s,
                            double delta_s, double t_sync_s = 60.0);

struct SlottedTx {
  double instant_s;
  std::int32_t slot;
};

// Uniform slot choice; the frame sits t_g/2 into its slot so positive and
// negative timing errors eat the guard evenly. The returned instant includes
// a zero-mean Gaussian offset with standard deviation u.
SlottedTx schedule_slotted_tx(Rng& rng, double window_start_s,
                              const SlotSchedule& schedule, double u_s);

// Pure ALOHA: uniform over the interval.
double schedule_aloha_tx(Rng& rng, double period_start_s, double t_tx_s);

// Broadcast listen windows needed per transmission interval: two clock-group
// receptions for the slotted mode (rate estimate + phase reference), none for
// plain ALOHA.
int sync_windows_per_interval(MacMode mode);

}  // namespace slora
