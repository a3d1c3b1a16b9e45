#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "slora/config.hpp"
#include "slora/engine.hpp"
#include "slora/mac.hpp"
#include "slora/metrics.hpp"
#include "slora/phy.hpp"
#include "slora/timing.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

slora::SimConfig load_config(const std::string& path) {
  if (path.empty()) {
    return slora::SimConfig{};
  }
  return slora::parse_config_file(path);
}

void print_budget(const slora::SimConfig& cfg, int sf, int payload,
                  double t_tx, int n) {
  using namespace slora;
  const CellConfig cell = make_cell(cfg, sf, payload, t_tx, n, MacMode::Slotted);
  const FrameParams frame = cell.frame_params();
  const double toa = time_on_air(frame);
  const SlotSchedule schedule =
      build_schedule(t_tx, toa, cfg.t_g0_s, cfg.delta_s, cfg.t_sync_s);
  const PropagationStats pd =
      propagation_stats(cfg.region_inner_m, cfg.region_outer_m);
  const double u_t0s = cfg.derived_u_t0s_s();
  const UncertaintyBudget budget =
      build_uncertainty_budget(schedule.k, cfg.tick_period_s(), u_t0s,
                               cfg.gamma_max(), cfg.t_sync_s, cfg.u_tx_s,
                               pd.u_s);

  std::printf("cell: sf=%d payload_bytes=%d t_tx_s=%g n_devices=%d\n", sf,
              payload, t_tx, n);
  std::printf("frame: toa_ms=%.6f payload_symbols=%d ldro=%s\n", toa * 1e3,
              payload_symbol_count(frame),
              frame.low_data_rate_opt ? "on" : "off");
  std::printf(
      "schedule: k=%d t_sync_s=%g delta_s=%g t_g_ms=%.3f t_slot_ms=%.6f "
      "m_slots=%lld contention_window_s=%g\n",
      schedule.k, schedule.t_sync_s, schedule.delta_s, schedule.t_g_s * 1e3,
      schedule.t_slot_s * 1e3, static_cast<long long>(schedule.m_slots),
      schedule.contention_window_s);
  std::printf("clock: f0_hz=%g t0_us=%.6f gamma_max_ppm=%g\n", cfg.clock_f0_hz,
              cfg.tick_period_s() * 1e6, cfg.gamma_max_ppm);
  std::printf("propagation: mu_us=%.6f sigma_us=%.6f u_us=%.6f\n",
              pd.mu_s * 1e6, pd.sigma_s * 1e6, pd.u_s * 1e6);
  std::printf("uncertainty budget:\n");
  std::printf("  u_td_us      %.6f\n", budget.u_td_s * 1e6);
  std::printf("  u_t0q_us     %.6f\n", budget.u_t0q_s * 1e6);
  std::printf("  u_t0s_us     %.6f\n", budget.u_t0s_s * 1e6);
  std::printf("  u_t0_us      %.6f\n", budget.u_t0_s * 1e6);
  std::printf("  u_tsync_us   %.6f\n", budget.u_tsync_s * 1e6);
  std::printf("  u_beta_ticks %.9f\n", budget.u_beta_ticks);
  std::printf("  u_tx_us      %.6f\n", budget.u_tx_s * 1e6);
  std::printf("  u_pd_us      %.6f\n", budget.u_pd_s * 1e6);
  std::printf("  u_v_ms       %.6f\n", budget.u_v_s * 1e3);
  std::printf("  u_ms         %.6f\n", budget.u_combined_s * 1e3);
  std::printf("  u_v_2k_approx_ms %.6f\n",
              transmission_clock_uncertainty_simplified(schedule.k, u_t0s) *
                  1e3);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LoRaWAN / slotted-LoRa uplink simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path = "metrics.csv";
  std::optional<std::uint64_t> seed_flag;
  std::optional<std::string> mode_flag;
  std::optional<std::uint64_t> budget_flag;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) {
    workers = 1;
  }

  CLI::App* cmd_run = app.add_subcommand("run", "execute the experiment grid");
  cmd_run->add_option("--config", config_path, "configuration file");
  cmd_run->add_option("--out", out_path, "output CSV path");
  cmd_run->add_option("--seed", seed_flag, "master seed override");
  cmd_run->add_option("--workers", workers, "worker threads");
  cmd_run->add_option("--mode", mode_flag, "aloha|slotted|paired");
  cmd_run->add_option("--budget", budget_flag, "messages per run override");

  int sf = 0;
  int payload = 0;
  double t_tx = 0.0;
  int n_devices = 0;
  CLI::App* cmd_budget = app.add_subcommand(
      "budget", "print the slot schedule and timing uncertainty for one cell");
  cmd_budget->add_option("--config", config_path, "configuration file");
  cmd_budget->add_option("--sf", sf, "spreading factor");
  cmd_budget->add_option("--payload", payload, "payload bytes");
  cmd_budget->add_option("--t-tx", t_tx, "transmission interval, s");
  cmd_budget->add_option("--n", n_devices, "device count");

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "check a configuration and exit");
  cmd_validate->add_option("--config", config_path, "configuration file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    slora::SimConfig cfg = load_config(config_path);
    if (seed_flag.has_value()) {
      cfg.seed = *seed_flag;
    }
    if (budget_flag.has_value()) {
      cfg.budget_messages = *budget_flag;
    }
    if (mode_flag.has_value()) {
      if (*mode_flag == "aloha") {
        cfg.mode = slora::RunMode::Aloha;
      } else if (*mode_flag == "slotted") {
        cfg.mode = slora::RunMode::Slotted;
      } else if (*mode_flag == "paired") {
        cfg.mode = slora::RunMode::Paired;
      } else {
        throw slora::ConfigError("--mode must be aloha, slotted or paired");
      }
    }
    slora::validate(cfg);

    if (cmd_validate->parsed()) {
      std::cout << "config ok\n";
      return kExitOk;
    }

    if (cmd_budget->parsed()) {
      const int use_sf = sf > 0 ? sf : cfg.sf_list.front();
      const auto payload_it = cfg.payloads.find(use_sf);
      if (payload_it == cfg.payloads.end() || payload_it->second.empty()) {
        throw slora::ConfigError("budget: no payload list for requested SF");
      }
      const int use_payload = payload > 0 ? payload : payload_it->second.front();
      const double use_t_tx = t_tx > 0.0 ? t_tx : cfg.t_tx_list_s.front();
      const int use_n = n_devices > 0 ? n_devices : cfg.n_list.front();
      print_budget(cfg, use_sf, use_payload, use_t_tx, use_n);
      return kExitOk;
    }

    // run
    slora::run_grid_to_file(cfg, out_path, workers, &std::cerr);
    std::cerr << "wrote " << out_path << "\n";
    return kExitOk;
  } catch (const slora::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}
