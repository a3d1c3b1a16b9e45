#include "slora/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace slora {

namespace {

std::string format_metric(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct ModeAggregate {
  AggregateReport agg;
  std::vector<RunReport> reports;
};

ModeAggregate run_cell_mode(const SimConfig& config, const CellSpec& spec,
                            MacMode mode) {
  ModeAggregate out;
  const CellConfig cell = make_cell(config, spec.sf, spec.payload_bytes,
                                    spec.t_tx_s, spec.n_devices, mode);
  out.reports.reserve(static_cast<std::size_t>(config.runs_per_cell));
  for (int r = 0; r < config.runs_per_cell; ++r) {
    out.reports.push_back(run(cell, config.seed + static_cast<std::uint64_t>(r)));
  }
  out.agg = aggregate(out.reports);
  return out;
}

MetricsRow compute_cell(const SimConfig& config, const CellSpec& spec) {
  MetricsRow row;
  row.cell = spec;
  row.mode = config.mode;
  try {
    if (config.mode == RunMode::Paired) {
      const ModeAggregate aloha = run_cell_mode(config, spec, MacMode::Aloha);
      const ModeAggregate slotted =
          run_cell_mode(config, spec, MacMode::Slotted);
      for (std::size_t r = 0; r < aloha.reports.size(); ++r) {
        if (aloha.reports[r].pair_key != slotted.reports[r].pair_key ||
            aloha.reports[r].seed != slotted.reports[r].seed) {
          throw std::logic_error("paired runs diverged in config or seed");
        }
      }
      row.success_prob = slotted.agg.mean_success;
      row.success_std = slotted.agg.std_success;
      row.bits_per_joule = slotted.agg.mean_bits_per_joule;
      row.efficiency_std = slotted.agg.std_bits_per_joule;
      if (aloha.agg.mean_success > 0.0) {
        row.success_gain_pct =
            relative_gain_pct(slotted.agg.mean_success, aloha.agg.mean_success);
        row.success_gain_defined = true;
      }
      if (aloha.agg.mean_bits_per_joule > 0.0) {
        row.efficiency_gain_pct = relative_gain_pct(
            slotted.agg.mean_bits_per_joule, aloha.agg.mean_bits_per_joule);
        row.efficiency_gain_defined = true;
      }
    } else {
      const MacMode mode = config.mode == RunMode::Aloha ? MacMode::Aloha
                                                         : MacMode::Slotted;
      const ModeAggregate single = run_cell_mode(config, spec, mode);
      row.success_prob = single.agg.mean_success;
      row.success_std = single.agg.std_success;
      row.bits_per_joule = single.agg.mean_bits_per_joule;
      row.efficiency_std = single.agg.std_bits_per_joule;
    }
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<CellSpec> expand_grid(const SimConfig& config) {
  std::vector<CellSpec> cells;
  for (int sf : config.sf_list) {
    const auto payload_it = config.payloads.find(sf);
    if (payload_it == config.payloads.end()) {
      throw ConfigError("expand_grid: no payload list for sf" +
                        std::to_string(sf));
    }
    for (int payload : payload_it->second) {
      for (double t_tx : config.t_tx_list_s) {
        for (int n : config.n_list) {
          cells.push_back(CellSpec{sf, payload, t_tx, n});
        }
      }
    }
  }
  return cells;
}

double success_probability(const RunReport& report) {
  if (report.generated == 0) {
    throw std::domain_error("success_probability: no generated messages");
  }
  return static_cast<double>(report.delivered) /
         static_cast<double>(report.generated);
}

double relative_gain_pct(double slora_value, double lorawan_value) {
  if (lorawan_value <= 0.0) {
    throw std::domain_error("relative_gain_pct: baseline must be positive");
  }
  return 100.0 * (slora_value - lorawan_value) / lorawan_value;
}

std::vector<MetricsRow> run_grid(const SimConfig& config, int workers,
                                 std::ostream* progress) {
  validate(config);
  const std::vector<CellSpec> cells = expand_grid(config);
  std::vector<MetricsRow> rows(cells.size());

  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  const auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) {
        break;
      }
      rows[i] = compute_cell(config, cells[i]);
      if (progress != nullptr) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        *progress << "cell " << (i + 1) << "/" << cells.size() << " sf="
                  << cells[i].sf << " payload=" << cells[i].payload_bytes
                  << " t_tx=" << cells[i].t_tx_s << " n=" << cells[i].n_devices
                  << (rows[i].ok ? "" : std::string(" ERROR: ") + rows[i].error)
                  << std::endl;
      }
    }
  };

  int thread_count = workers;
  if (thread_count < 1) {
    thread_count = 1;
  }
  thread_count = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(thread_count),
                            std::max<std::size_t>(cells.size(), 1)));
  if (thread_count <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) {
      pool.emplace_back(work);
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }
  return rows;
}

void write_csv(const std::vector<MetricsRow>& rows, std::ostream& out) {
  out << kCsvSchemaLine << "\n" << kCsvHeaderLine << "\n";
  for (const MetricsRow& row : rows) {
    out << row.cell.sf << "," << row.cell.payload_bytes << ","
        << format_metric(row.cell.t_tx_s) << "," << row.cell.n_devices << ","
        << run_mode_name(row.mode) << ",";
    if (row.ok) {
      out << format_metric(row.success_prob) << ","
          << format_metric(row.success_std) << ","
          << format_metric(row.bits_per_joule) << ","
          << format_metric(row.efficiency_std) << ",";
      if (row.success_gain_defined) {
        out << format_metric(row.success_gain_pct);
      }
      out << ",";
      if (row.efficiency_gain_defined) {
        out << format_metric(row.efficiency_gain_pct);
      }
      out << "\n";
    } else {
      out << ",,,,,\n";
      out << "# error sf=" << row.cell.sf << " payload="
          << row.cell.payload_bytes << " t_tx="
          << format_metric(row.cell.t_tx_s) << " n=" << row.cell.n_devices
          << ": " << row.error << "\n";
    }
  }
}

void run_grid_to_file(const SimConfig& config, const std::string& out_path,
                      int workers, std::ostream* progress) {
  const std::vector<MetricsRow> rows = run_grid(config, workers, progress);
  std::ostringstream buffer;
  write_csv(rows, buffer);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("run_grid_to_file: cannot open " + out_path);
  }
  out << buffer.str();
  if (!out) {
    throw std::runtime_error("run_grid_to_file: write failed for " + out_path);
  }
}

}  // namespace slora
