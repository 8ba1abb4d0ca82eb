#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "lcbench/sim/types.hpp"

namespace lcbench::scenario {

enum class BehaviorKind {
  IdmLaneKeep,     // IDM car following toward a desired speed, keeps its lane
  ConstantSpeed,   // holds its initial speed exactly (0 = stationary)
  TriggeredSpawn,  // absent until the ego closes within trigger_distance
  TriggeredCutIn,  // constant speed; changes into the ego's lane on trigger
};

struct SocialBehavior {
  BehaviorKind kind = BehaviorKind::IdmLaneKeep;
  double desired_speed = 0.0;  // m/s, used by IdmLaneKeep
  bool random_lane_change = false;
  double trigger_distance = 0.0;             // m, triggered kinds
  sim::LcDirection cut_in_direction = sim::LcDirection::Right;
};

/// A vehicle that enters the world later, on a distance trigger.
struct PendingSpawn {
  sim::VehicleState vehicle;
  double trigger_distance = 0.0;  // fires when ego_s >= vehicle.s - trigger
};

struct BehaviorTable {
  std::unordered_map<sim::VehicleId, SocialBehavior> behaviors;
  std::vector<PendingSpawn> pending_spawns;
};

/// A generator's output: the initial world, the social behavior table, and
/// the seeds recorded for reproducibility. behavior_seed drives in-episode
/// social randomness (training-scenario random lane changes).
struct GeneratedWorld {
  sim::WorldState world;
  BehaviorTable behaviors;
  std::uint64_t seed = 0;
  std::uint64_t behavior_seed = 0;
};

}  // namespace lcbench::scenario
