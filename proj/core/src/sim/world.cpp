#include "lcbench/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcbench::sim {

int membership_lane(const VehicleState& v) {
  if (v.lc && v.lc->progress < 0.5) return v.lc->from_lane;
  if (v.lc) return v.lc->to_lane;
  return v.lane_index;
}

namespace {

void integrate_longitudinal(VehicleState& v, double a, double dt) {
  const double v1 = v.speed + a * dt;
  if (v1 >= 0.0) {
    v.s += v.speed * dt + 0.5 * a * dt * dt;
    v.speed = v1;
  } else {
    // Comes to rest within the step; advance to the stopping point only.
    const double t_stop = (a < 0.0) ? v.speed / -a : 0.0;
    v.s += v.speed * t_stop + 0.5 * a * t_stop * t_stop;
    v.speed = 0.0;
  }
  v.accel = a;
}

void integrate_lateral(VehicleState& v, const RoadModel& road, double dt) {
  if (!v.lc) return;
  auto& lc = *v.lc;
  lc.progress = std::min(1.0, lc.progress + dt / kLaneChangeDuration);
  const double y0 = road.centerline(lc.from_lane);
  const double y1 = road.centerline(lc.to_lane);
  v.y = y0 + (y1 - y0) * lc.progress;
  v.lane_index = lc.progress >= 0.5 ? lc.to_lane : lc.from_lane;
  if (lc.progress >= 1.0) {
    v.y = y1;
    v.lane_index = lc.to_lane;
    v.lc.reset();
  }
}

}  // namespace

WorldState step(const WorldState& world, double dt, const Controls& controls) {
  if (dt <= 0.0) throw std::invalid_argument("step: dt must be positive");
  for (const auto& [id, c] : controls) {
    if (!world.find(id)) throw std::invalid_argument("step: control for unknown vehicle id");
    (void)c;
  }

  WorldState next = world;
  next.time = world.time + dt;
  for (auto& v : next.vehicles) {
    const auto it = controls.find(v.id);
    const VehicleControl ctrl = it != controls.end() ? it->second : VehicleControl{};

    if (ctrl.lane_change && !v.lc) {
      const int target = v.lane_index + lane_delta(*ctrl.lane_change);
      if (next.road.has_lane(target)) {
        v.lc = LaneChange{*ctrl.lane_change, 0.0, v.lane_index, target};
      }
    }
    integrate_longitudinal(v, ctrl.accel, dt);
    integrate_lateral(v, next.road, dt);
  }
  return next;
}

std::vector<std::pair<VehicleId, VehicleId>> collision_pairs(const WorldState& world) {
  std::vector<std::pair<VehicleId, VehicleId>> out;
  const auto& vs = world.vehicles;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const auto& a = vs[i];
      const auto& b = vs[j];
      const bool overlap_s = std::abs(a.s - b.s) < 0.5 * (a.length + b.length);
      const bool overlap_y = std::abs(a.y - b.y) < 0.5 * (a.width + b.width);
      if (overlap_s && overlap_y) {
        out.emplace_back(std::min(a.id, b.id), std::max(a.id, b.id));
      }
    }
  }
  return out;
}

std::optional<Leader> leader_of(const WorldState& world, VehicleId id, int lane) {
  if (!world.road.has_lane(lane)) throw std::invalid_argument("leader_of: lane out of range");
  const VehicleState* self = world.find(id);
  if (!self) throw std::invalid_argument("leader_of: unknown vehicle id");

  const VehicleState* best = nullptr;
  for (const auto& v : world.vehicles) {
    if (v.id == id || membership_lane(v) != lane) continue;
    if (v.s <= self->s) continue;
    if (!best || v.s < best->s) best = &v;
  }
  if (!best) return std::nullopt;
  const double gap = (best->s - self->s) - 0.5 * (best->length + self->length);
  return Leader{gap, best->speed};
}

std::optional<Follower> follower_of(const WorldState& world, VehicleId id, int lane) {
  if (!world.road.has_lane(lane)) throw std::invalid_argument("follower_of: lane out of range");
  const VehicleState* self = world.find(id);
  if (!self) throw std::invalid_argument("follower_of: unknown vehicle id");

  const VehicleState* best = nullptr;
  for (const auto& v : world.vehicles) {
    if (v.id == id || membership_lane(v) != lane) continue;
    if (v.s >= self->s) continue;
    if (!best || v.s > best->s) best = &v;
  }
  if (!best) return std::nullopt;
  const double gap = (self->s - best->s) - 0.5 * (best->length + self->length);
  return Follower{best->id, gap, best->speed};
}

}  // namespace lcbench::sim
