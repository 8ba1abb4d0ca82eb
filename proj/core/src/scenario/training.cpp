#include "lcbench/scenario/training.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lcbench/rng.hpp"
#include "lcbench/sim/world.hpp"

namespace lcbench::scenario {

using sim::VehicleState;
using sim::WorldState;

namespace {

bool overlaps_any(const WorldState& world, const VehicleState& cand) {
  for (const auto& v : world.vehicles) {
    const bool overlap_s = std::abs(v.s - cand.s) < 0.5 * (v.length + cand.length);
    const bool overlap_y = std::abs(v.y - cand.y) < 0.5 * (v.width + cand.width);
    if (overlap_s && overlap_y) return true;
  }
  return false;
}

GeneratedWorld generate(std::uint64_t seed, const TrainingConfig& cfg) {
  Rng rng(seed);

  GeneratedWorld out;
  out.seed = seed;
  WorldState& world = out.world;
  world.road.lane_count = cfg.lane_count;
  world.road.segment_length = cfg.segment_length;

  VehicleState ego;
  ego.id = 0;
  ego.lane_index = rng.uniform_int(0, cfg.lane_count - 1);
  ego.s = cfg.ego_start_s;
  ego.y = world.road.centerline(ego.lane_index);
  ego.speed = sim::kmh_to_ms(cfg.ego_initial_speed_kmh);
  world.vehicles.push_back(ego);
  world.ego_id = ego.id;

  const int n = rng.uniform_int(cfg.social_count_min, cfg.social_count_max);
  // Rearmost occupied position per lane; chains fill front to back so each
  // vehicle keeps a sampled following gap behind its front vehicle.
  std::vector<double> lane_tail(static_cast<std::size_t>(cfg.lane_count),
                                ego.s + cfg.spawn_ahead + sim::kVehicleLength);

  for (int i = 0; i < n; ++i) {
    VehicleState v;
    v.id = static_cast<sim::VehicleId>(i + 1);
    v.speed = sim::kmh_to_ms(rng.uniform(cfg.social_speed_min_kmh, cfg.social_speed_max_kmh));

    // Window of 210 m x lane_count always fits 12 vehicles at gap >= 0, so
    // resampling the lane and gap terminates.
    for (;;) {
      const int lane = rng.uniform_int(0, cfg.lane_count - 1);
      const double gap = rng.uniform(cfg.follow_gap_min, cfg.follow_gap_max);
      const double s = lane_tail[static_cast<std::size_t>(lane)] - gap - sim::kVehicleLength;
      if (s < ego.s - cfg.spawn_behind) continue;
      VehicleState cand = v;
      cand.lane_index = lane;
      cand.s = s;
      cand.y = world.road.centerline(lane);
      if (overlaps_any(world, cand)) continue;
      world.vehicles.push_back(cand);
      lane_tail[static_cast<std::size_t>(lane)] = s;
      break;
    }

    SocialBehavior b;
    b.kind = BehaviorKind::IdmLaneKeep;
    b.desired_speed = v.speed;
    b.random_lane_change = cfg.social_random_lc;
    out.behaviors.behaviors[v.id] = b;
  }

  out.behavior_seed = rng.next_u64();
  return out;
}

}  // namespace

GeneratedWorld gen_training(std::uint64_t seed, const TrainingConfig& cfg) {
  return generate(seed, cfg);
}

GeneratedWorld gen_stochastic_test(std::uint64_t seed, const StochasticTestConfig& cfg) {
  return generate(seed, cfg.base);
}

}  // namespace lcbench::scenario
