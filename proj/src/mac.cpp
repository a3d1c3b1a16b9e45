#include "slora/mac.hpp"

#include <cmath>
#include <stdexcept>

#include "slora/timing.hpp"

namespace slora {

const char* mac_mode_name(MacMode mode) {
  return mode == MacMode::Aloha ? "aloha" : "slotted";
}

double guard_time_s(int k, double t_g0_s) {
  if (k < 1) {
    throw std::invalid_argument("guard_time_s: k must be at least 1");
  }
  return static_cast<double>(k) * t_g0_s;
}

SlotSchedule build_schedule(double t_tx_s, double toa_s, double t_g0_s,
                            double delta_s, double t_sync_s) {
  if (t_sync_s <= 0.0 || t_tx_s <= 0.0) {
    throw std::invalid_argument("build_schedule: nonpositive interval");
  }
  const double ratio = t_tx_s / t_sync_s;
  const int k = static_cast<int>(std::llround(ratio));
  if (k < 1 || std::abs(ratio - static_cast<double>(k)) > 1e-9) {
    throw std::invalid_argument(
        "build_schedule: t_tx must be a positive integer multiple of t_sync");
  }
  if (delta_s < 0.0 || delta_s >= t_tx_s) {
    throw std::invalid_argument("build_schedule: delta outside [0, t_tx)");
  }

  SlotSchedule s;
  s.t_tx_s = t_tx_s;
  s.k = k;
  s.t_sync_s = t_sync_s;
  s.delta_s = delta_s;
  s.toa_s = toa_s;
  s.t_g_s = guard_time_s(k, t_g0_s);
  s.t_slot_s = toa_s + s.t_g_s;
  s.contention_window_s = t_tx_s - delta_s;
  if (s.t_slot_s <= 0.0 || s.t_slot_s > s.contention_window_s) {
    throw std::invalid_argument(
        "build_schedule: no usable slot fits the contention window");
  }
  s.m_slots = static_cast<std::int64_t>(
      std::floor(s.contention_window_s / s.t_slot_s));
  return s;
}

SlottedTx schedule_slotted_tx(Rng& rng, double window_start_s,
                              const SlotSchedule& schedule, double u_s) {
  if (schedule.m_slots < 1) {
    throw std::invalid_argument("schedule_slotted_tx: schedule has no slots");
  }
  const auto slot = static_cast<std::int64_t>(
      rng.uniform_int(static_cast<std::uint64_t>(schedule.m_slots)));
  const double ideal = window_start_s + schedule.delta_s +
                       static_cast<double>(slot) * schedule.t_slot_s +
                       schedule.t_g_s / 2.0;
  return SlottedTx{ideal + sample_timing_offset(rng, u_s),
                   static_cast<std::int32_t>(slot)};
}

double schedule_aloha_tx(Rng& rng, double period_start_s, double t_tx_s) {
  if (t_tx_s <= 0.0) {
    throw std::invalid_argument("schedule_aloha_tx: interval must be positive");
  }
  return period_start_s + rng.uniform01() * t_tx_s;
}

int sync_windows_per_interval(MacMode mode) {
  return mode == MacMode::Slotted ? 2 : 0;
}

}  // namespace slora
