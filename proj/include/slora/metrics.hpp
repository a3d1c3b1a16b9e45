#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slora/config.hpp"
#include "slora/engine.hpp"

namespace slora {

inline constexpr const char* kCsvSchemaLine = "# slora-metrics-v1";
inline constexpr const char* kCsvHeaderLine =
    "sf,payload_bytes,t_tx_s,n_devices,mode,success_prob,success_std,"
    "bits_per_joule,efficiency_std,success_gain_pct,efficiency_gain_pct";

struct CellSpec {
  int sf;
  int payload_bytes;
  double t_tx_s;
  int n_devices;
};

// Grid order is fixed: sf, then payload, then t_tx, then n. Row order in the
// CSV follows it.
std::vector<CellSpec> expand_grid(const SimConfig& config);

struct MetricsRow {
  CellSpec cell{};
  RunMode mode = RunMode::Aloha;
  bool ok = false;
  std::string error;  // infeasible cell: metrics left empty, run continues

  // absolute metrics; in paired mode these are the slotted values
  double success_prob = 0.0;
  double success_std = 0.0;
  double bits_per_joule = 0.0;
  double efficiency_std = 0.0;

  bool success_gain_defined = false;
  double success_gain_pct = 0.0;
  bool efficiency_gain_defined = false;
  double efficiency_gain_pct = 0.0;
};

// delivered / generated; undefined for an empty run.
double success_probability(const RunReport& report);

// 100 * (slora - lorawan) / lorawan; the baseline must be positive.
double relative_gain_pct(double slora_value, double lorawan_value);

// Runs every grid cell (runs_per_cell seeded runs per MAC mode, both modes in
// paired mode) on a small worker pool. Infeasible cells produce a row with an
// error note instead of aborting the grid. Progress goes to `progress` when
// non-null; row order is deterministic.
std::vector<MetricsRow> run_grid(const SimConfig& config, int workers,
                                 std::ostream* progress);

void write_csv(const std::vector<MetricsRow>& rows, std::ostream& out);

// Convenience: run_grid + write to a file; throws on I/O failure.
void run_grid_to_file(const SimConfig& config, const std::string& out_path,
                      int workers, std::ostream* progress);

}  // namespace slora
