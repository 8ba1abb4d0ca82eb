#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcbench/sim/idm.hpp"
#include "lcbench/sim/types.hpp"

namespace lcbench::sim {

using Controls = std::unordered_map<VehicleId, VehicleControl>;

/// The lane a vehicle counts as occupying for neighbor queries: the target
/// lane once a lane change is at least half executed, otherwise the source
/// lane. Equals lane_index for states produced by step().
int membership_lane(const VehicleState& v);

/// Advances the world by dt. Pure: the input world is unmodified.
///
/// Longitudinal: speed' = max(0, speed + a*dt), s advances by the exact
/// kinematic displacement, cut off at the stopping point when the speed
/// clamp engages (so s never decreases). Lateral: an in-progress lane change
/// ramps y linearly between source and target centerlines over the fixed
/// lane-change duration. New lane-change commands are accepted only for
/// vehicles not already changing lanes and only into existing lanes.
WorldState step(const WorldState& world, double dt, const Controls& controls);

/// All id pairs (a < b) whose axis-aligned footprint rectangles overlap with
/// positive area.
std::vector<std::pair<VehicleId, VehicleId>> collision_pairs(const WorldState& world);

/// Nearest vehicle ahead of `id` in `lane` by bumper-to-bumper gap
/// (center distance minus both half-lengths). std::nullopt if empty ahead.
/// The gap may be <= 0 when footprints already overlap longitudinally.
std::optional<Leader> leader_of(const WorldState& world, VehicleId id, int lane);

/// Nearest vehicle behind `id` in `lane`; gap is bumper-to-bumper.
struct Follower {
  VehicleId id;
  double gap;
  double speed;
};
std::optional<Follower> follower_of(const WorldState& world, VehicleId id, int lane);

}  // namespace lcbench::sim
