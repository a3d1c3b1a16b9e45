#include "slora/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

#include "slora/channel.hpp"

namespace slora {

namespace {

// MAC header, frame header, port and MIC around the application payload.
constexpr int kLorawanOverheadBytes = 13;

struct DeviceStatics {
  double loss_db;
  double pd_delay_s;
  double drift;
  double static_shadow_db;  // used only in per-device shadowing mode
};

}  // namespace

RunReport run(const CellConfig& cell, std::uint64_t seed) {
  const SimConfig& base = cell.base;
  RunReport report;
  report.seed = seed;
  report.cell_hash = cell.cell_hash();
  report.pair_key = cell.pair_key();

  const FrameParams frame = cell.frame_params();
  const double toa = time_on_air(frame);
  const LinkBudgetParams link = cell.link_params();
  const SnrThresholds thresholds = cell.snr_thresholds();
  const PowerProfile profile = cell.power_profile();
  const auto n = static_cast<std::uint64_t>(cell.n_devices);

  const std::uint64_t intervals =
      cell.budget_messages == 0 ? 0 : (cell.budget_messages + n - 1) / n;
  report.intervals = intervals;

  double timing_u = 0.0;
  if (cell.mode == MacMode::Slotted) {
    report.schedule = build_schedule(cell.t_tx_s, toa, base.t_g0_s,
                                     base.delta_s, base.t_sync_s);
    const PropagationStats pd =
        propagation_stats(base.region_inner_m, base.region_outer_m);
    report.uncertainty = build_uncertainty_budget(
        report.schedule.k, base.tick_period_s(), base.derived_u_t0s_s(),
        base.gamma_max(), base.t_sync_s, base.u_tx_s, pd.u_s);
    timing_u = report.uncertainty.u_combined_s;
  }

  const Topology topo = generate_topology(cell.scenario_params(), seed);

  std::vector<DeviceStatics> devices(topo.devices.size());
  for (std::size_t d = 0; d < topo.devices.size(); ++d) {
    const DevicePlacement& placement = topo.devices[d];
    devices[d].loss_db =
        path_loss_db(placement.distance_m, placement.floor,
                     placement.internal_walls, link, &report.clamp_warnings);
    devices[d].pd_delay_s = placement.distance_m / kSpeedOfLight;
    devices[d].drift = placement.clock_drift;
    if (base.shadowing_per_device) {
      Rng shadow_rng = Rng::substream(seed, Stream::Shadow, placement.device_id);
      devices[d].static_shadow_db =
          shadow_rng.normal(0.0, base.shadowing_sigma_db);
    }
  }

  std::vector<TransmissionRecord> records;
  records.reserve(static_cast<std::size_t>(intervals * n));
  for (std::uint64_t interval = 0; interval < intervals; ++interval) {
    const double window_start = static_cast<double>(interval) * cell.t_tx_s;
    for (std::uint64_t d = 0; d < n; ++d) {
      Rng mac_rng = Rng::substream(seed, Stream::Mac, d, interval);
      double instant = 0.0;
      std::int32_t slot = 0;
      if (cell.mode == MacMode::Slotted) {
        const SlottedTx tx =
            schedule_slotted_tx(mac_rng, window_start, report.schedule, timing_u);
        instant = tx.instant_s;
        slot = tx.slot;
      } else {
        instant = schedule_aloha_tx(mac_rng, window_start, cell.t_tx_s);
      }

      double shadow = devices[d].static_shadow_db;
      if (!base.shadowing_per_device) {
        Rng shadow_rng = Rng::substream(seed, Stream::Shadow, d, interval);
        shadow = shadow_rng.normal(0.0, base.shadowing_sigma_db);
      }

      TransmissionRecord rec;
      rec.device_id = static_cast<std::uint32_t>(d);
      rec.sf = cell.sf;
      rec.start_time_s = instant + devices[d].pd_delay_s;
      rec.toa_s = toa;
      rec.snr_db =
          rx_snr_db(base.tx_power_dbm, devices[d].loss_db, shadow, link);
      rec.interval_index = static_cast<std::int64_t>(interval);
      rec.slot_index = slot;
      records.push_back(rec);
    }
  }
  report.generated = records.size();

  // Overlap windows are maximal chains of frames connected by pairwise
  // temporal overlap at the gateway; with records sorted by arrival, a chain
  // occupies a contiguous range that closes when the active count returns to
  // zero.
  std::sort(records.begin(), records.end(),
            [](const TransmissionRecord& a, const TransmissionRecord& b) {
              if (a.start_time_s != b.start_time_s) {
                return a.start_time_s < b.start_time_s;
              }
              if (a.device_id != b.device_id) {
                return a.device_id < b.device_id;
              }
              return a.interval_index < b.interval_index;
            });

  std::vector<SimEvent> events;
  events.reserve(records.size() * 2 + intervals);
  for (std::uint32_t idx = 0; idx < records.size(); ++idx) {
    const TransmissionRecord& rec = records[idx];
    events.push_back(
        SimEvent{rec.start_time_s, EventKind::TxStart, rec.device_id, idx});
    events.push_back(SimEvent{rec.start_time_s + rec.toa_s, EventKind::TxEnd,
                              rec.device_id, idx});
  }
  for (std::uint64_t interval = 0; interval < intervals; ++interval) {
    events.push_back(SimEvent{static_cast<double>(interval) * cell.t_tx_s,
                              EventKind::WindowBoundary, 0,
                              static_cast<std::uint32_t>(interval)});
  }
  std::sort(events.begin(), events.end());

  std::vector<std::uint32_t> delivered_per_device(n, 0);
  std::size_t active = 0;
  std::size_t chain_begin = 0;
  std::size_t chain_end = 0;  // one past the last started frame
  [[maybe_unused]] double clock = -std::numeric_limits<double>::infinity();
  for (const SimEvent& ev : events) {
    assert(ev.time_s >= clock && "event processed out of time order");
    clock = ev.time_s;
    switch (ev.kind) {
      case EventKind::TxStart:
        if (active == 0) {
          chain_begin = ev.frame_index;
        }
        chain_end = ev.frame_index + 1;
        ++active;
        break;
      case EventKind::TxEnd:
        --active;
        if (active == 0) {
          auto chain = std::span<TransmissionRecord>(
              records.data() + chain_begin, chain_end - chain_begin);
          resolve_receptions(chain, base.sir_threshold_db, thresholds,
                             base.preamble_survival_symbols, base.bandwidth_hz);
        }
        break;
      case EventKind::WindowBoundary:
        break;
    }
  }
  assert(active == 0);

  for (const TransmissionRecord& rec : records) {
    report.outcome_counts[static_cast<std::size_t>(rec.outcome)]++;
    if (rec.outcome == Outcome::Delivered) {
      ++report.delivered;
      ++delivered_per_device[rec.device_id];
    }
  }

  const int counted_bytes =
      base.count_full_phy_payload_bits
          ? cell.payload_bytes + kLorawanOverheadBytes
          : cell.payload_bytes;
  for (std::uint64_t d = 0; d < n; ++d) {
    EnergyLedger ledger;
    for (std::uint64_t interval = 0; interval < intervals; ++interval) {
      accumulate_interval(ledger, cell.mode, cell.t_tx_s, toa,
                          std::abs(devices[d].drift), profile);
    }
    ledger.bits_delivered = static_cast<std::uint64_t>(8 * counted_bytes) *
                            delivered_per_device[d];
    report.energy.merge(ledger);
  }

  if (report.generated > 0) {
    report.success_probability = static_cast<double>(report.delivered) /
                                 static_cast<double>(report.generated);
  }
  if (report.energy.total_energy_j() > 0.0) {
    report.bits_per_joule = energy_efficiency_bits_per_joule(report.energy);
  }
  return report;
}

AggregateReport aggregate(const std::vector<RunReport>& reports) {
  if (reports.empty()) {
    throw std::invalid_argument("aggregate: no reports");
  }
  for (const RunReport& r : reports) {
    if (r.cell_hash != reports.front().cell_hash) {
      throw std::invalid_argument("aggregate: reports from mixed configs");
    }
  }
  AggregateReport agg;
  agg.runs = reports.size();
  double sum_s = 0.0;
  double sum_e = 0.0;
  for (const RunReport& r : reports) {
    sum_s += r.success_probability;
    sum_e += r.bits_per_joule;
  }
  const auto count = static_cast<double>(reports.size());
  agg.mean_success = sum_s / count;
  agg.mean_bits_per_joule = sum_e / count;
  if (reports.size() > 1) {
    double var_s = 0.0;
    double var_e = 0.0;
    for (const RunReport& r : reports) {
      var_s += (r.success_probability - agg.mean_success) *
               (r.success_probability - agg.mean_success);
      var_e += (r.bits_per_joule - agg.mean_bits_per_joule) *
               (r.bits_per_joule - agg.mean_bits_per_joule);
    }
    agg.std_success = std::sqrt(var_s / (count - 1.0));
    agg.std_bits_per_joule = std::sqrt(var_e / (count - 1.0));
  }
  return agg;
}

}  // namespace slora
