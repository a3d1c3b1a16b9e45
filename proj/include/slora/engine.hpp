#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "slora/config.hpp"
#include "slora/energy.hpp"
#include "slora/mac.hpp"
#include "slora/phy.hpp"
#include "slora/timing.hpp"

namespace slora {

// TxEnd sorts first so that back-to-back frames sharing an instant do not
// chain together (frame intervals are half-open).
enum class EventKind : std::uint8_t {
  TxEnd = 0,
  WindowBoundary = 1,
  TxStart = 2,
};

struct SimEvent {
  double time_s;
  EventKind kind;
  std::uint32_t device_id;
  std::uint32_t frame_index;

  friend bool operator<(const SimEvent& a, const SimEvent& b) {
    if (a.time_s != b.time_s) return a.time_s < b.time_s;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.device_id != b.device_id) return a.device_id < b.device_id;
    return a.frame_index < b.frame_index;
  }
};

struct RunReport {
  std::uint64_t generated = 0;
  std::uint64_t delivered = 0;
  std::array<std::uint64_t, kOutcomeCount> outcome_counts{};
  std::uint64_t intervals = 0;
  std::uint64_t clamp_warnings = 0;
  EnergyLedger energy;  // merged over all devices
  UncertaintyBudget uncertainty;
  SlotSchedule schedule;  // m_slots == 0 in ALOHA mode
  double success_probability = 0.0;
  double bits_per_joule = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t cell_hash = 0;
  std::uint64_t pair_key = 0;

  bool operator==(const RunReport&) const = default;
};

// Simulates one MAC mode over one seeded topology until every device has sent
// ceil(budget / N) messages. Deterministic in (cell, seed); paired ALOHA and
// slotted runs with equal seeds see identical topologies, drifts and
// per-transmission shadowing draws.
RunReport run(const CellConfig& cell, std::uint64_t seed);

struct AggregateReport {
  double mean_success = 0.0;
  double std_success = 0.0;
  double mean_bits_per_joule = 0.0;
  double std_bits_per_joule = 0.0;
  std::size_t runs = 0;
};

// Mean and sample standard deviation across runs of one cell; rejects
// reports from differing configurations.
AggregateReport aggregate(const std::vector<RunReport>& reports);

}  // namespace slora
