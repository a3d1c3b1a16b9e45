#include "slora/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace slora {

double annulus_radial_cdf(double d, double r_inner_m, double r_outer_m) {
  if (d <= r_inner_m) return 0.0;
  if (d >= r_outer_m) return 1.0;
  return (d * d - r_inner_m * r_inner_m) /
         (r_outer_m * r_outer_m - r_inner_m * r_inner_m);
}

Topology generate_topology(const ScenarioParams& params, std::uint64_t seed) {
  if (params.n_devices < 1) {
    throw std::invalid_argument("generate_topology: need at least one device");
  }
  if (params.region_inner_m < 0.0 ||
      params.region_inner_m >= params.region_outer_m) {
    throw std::invalid_argument(
        "generate_topology: need 0 <= inner radius < outer radius");
  }
  if (params.floor_min < 1 || params.floor_min > params.floor_max ||
      params.walls_min < 0 || params.walls_min > params.walls_max) {
    throw std::invalid_argument("generate_topology: bad floor/wall ranges");
  }

  Topology topo;
  topo.region_inner_m = params.region_inner_m;
  topo.region_outer_m = params.region_outer_m;
  topo.devices.reserve(static_cast<std::size_t>(params.n_devices));

  Rng rng = Rng::substream(seed, Stream::Topology);
  const double inner2 = params.region_inner_m * params.region_inner_m;
  const double outer2 = params.region_outer_m * params.region_outer_m;
  const auto floor_span =
      static_cast<std::uint64_t>(params.floor_max - params.floor_min + 1);
  const auto wall_span =
      static_cast<std::uint64_t>(params.walls_max - params.walls_min + 1);

  for (int i = 0; i < params.n_devices; ++i) {
    DevicePlacement dev;
    dev.device_id = static_cast<std::uint32_t>(i);
    // inverse-CDF draw: uniform by area, not by radius
    dev.distance_m = std::sqrt(inner2 + rng.uniform01() * (outer2 - inner2));
    dev.angle_rad = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    dev.floor = params.floor_min + static_cast<int>(rng.uniform_int(floor_span));
    dev.internal_walls =
        params.walls_min + static_cast<int>(rng.uniform_int(wall_span));
    Rng drift_rng = Rng::substream(seed, Stream::Drift, dev.device_id);
    dev.clock_drift = drift_rng.uniform(-params.gamma_max, params.gamma_max);
    topo.devices.push_back(dev);
  }
  return topo;
}

double device_height_m(int floor, double floor_height_m) {
  if (floor < 1) {
    throw std::invalid_argument("device_height_m: floors are numbered from 1");
  }
  return 1.0 + floor_height_m * static_cast<double>(floor - 1);
}

std::string topology_table(const Topology& topo) {
  std::string out = "device_id,distance_m,floor,internal_walls\n";
  char line[96];
  for (const auto& dev : topo.devices) {
    std::snprintf(line, sizeof(line), "%u,%.6f,%d,%d\n", dev.device_id,
                  dev.distance_m, dev.floor, dev.internal_walls);
    out += line;
  }
  return out;
}

}  // namespace slora
