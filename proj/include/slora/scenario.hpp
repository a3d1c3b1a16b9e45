#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slora/rng.hpp"

namespace slora {

struct ScenarioParams {
  int n_devices = 5000;
  double region_inner_m = 0.0;
  double region_outer_m = 1500.0;
  int floor_min = 1;  // ground floor
  int floor_max = 4;
  int walls_min = 0;
  int walls_max = 3;
  double floor_height_m = 3.0;
  double gamma_max = 20e-6;  // per-device drift magnitude bound
};

struct DevicePlacement {
  std::uint32_t device_id;
  double distance_m;
  double angle_rad;  // drawn but unused by the channel model
  int floor;
  int internal_walls;
  double clock_drift;  // fractional, uniform on [-gamma_max, +gamma_max]
};

struct Topology {
  double gateway_x_m = 0.0;
  double gateway_y_m = 0.0;
  double region_inner_m = 0.0;
  double region_outer_m = 0.0;
  std::vector<DevicePlacement> devices;
};

// Radial CDF of an area-uniform draw on the annulus [r_inner, r_outer].
double annulus_radial_cdf(double d, double r_inner_m, double r_outer_m);

// Seeded, deterministic deployment: distances area-uniform on the annulus,
// floors and wall counts discrete-uniform, drift uniform per device.
Topology generate_topology(const ScenarioParams& params, std::uint64_t seed);

// Antenna height rule: 1 m on the ground floor, one storey height per floor
// above it.
double device_height_m(int floor, double floor_height_m);

// Line-oriented table (device_id, distance, floor, walls) for inspection.
std::string topology_table(const Topology& topo);

}  // namespace slora
