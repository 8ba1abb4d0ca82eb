#include "lcbench/env/environment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcbench::env {

namespace {

bool direction_allowed(const EnvConfig& cfg, Action a) {
  if (a == Action::Left) return cfg.allow_left;
  if (a == Action::Right) return cfg.allow_right;
  return true;
}

sim::LcDirection to_direction(Action a) {
  return a == Action::Left ? sim::LcDirection::Left : sim::LcDirection::Right;
}

/// Interval-occupancy check shared by the rule mask and the social drivers'
/// gap-safe test: true when some other vehicle in `lane` overlaps
/// [s - gap_rear, s + gap_front] around the longitudinal position `s`.
bool lane_interval_occupied(const sim::WorldState& world, sim::VehicleId self, int lane,
                            double s, double gap_rear, double gap_front) {
  for (const auto& v : world.vehicles) {
    if (v.id == self || sim::membership_lane(v) != lane) continue;
    const double lo = v.s - 0.5 * v.length;
    const double hi = v.s + 0.5 * v.length;
    if (hi > s - gap_rear && lo < s + gap_front) return true;
  }
  return false;
}

double idm_or_emergency(const sim::WorldState& world, const sim::VehicleState& v,
                        const sim::IdmParams& p) {
  const auto leader = sim::leader_of(world, v.id, sim::membership_lane(v));
  if (leader && leader->gap <= 0.0) return -p.hard_brake;  // already overlapped
  return sim::idm_acceleration(v.speed, leader, p);
}

}  // namespace

Action rule_mask(const sim::WorldState& world, Action proposed, const EnvConfig& cfg) {
  if (proposed == Action::Keep) return Action::Keep;
  const auto& ego = world.ego();
  const int target = sim::membership_lane(ego) + sim::lane_delta(to_direction(proposed));
  if (!world.road.has_lane(target) || !direction_allowed(cfg, proposed)) return Action::Keep;
  if (lane_interval_occupied(world, ego.id, target, ego.s, cfg.mask_gap_rear,
                             cfg.mask_gap_front))
    return Action::Keep;
  return proposed;
}

const Observation& Environment::reset(const scenario::GeneratedWorld& start) {
  world_ = start.world;
  behaviors_ = start.behaviors;
  rng_ = Rng(start.behavior_seed);
  done_ = false;
  collided_ = false;
  lane_change_count_ = 0;
  max_abs_accel_episode_ = 0.0;
  const auto& ego = world_.ego();
  initial_lane_ = ego.lane_index;
  start_s_ = ego.s;
  fire_pending_spawns();
  last_obs_ = rasterize(world_);
  return last_obs_;
}

void Environment::fire_pending_spawns() {
  const double ego_s = world_.ego().s;
  auto& pending = behaviors_.pending_spawns;
  for (auto it = pending.begin(); it != pending.end();) {
    if (ego_s >= it->vehicle.s - it->trigger_distance) {
      world_.vehicles.push_back(it->vehicle);
      it = pending.erase(it);
    } else {
      ++it;
    }
  }
}

sim::Controls Environment::social_controls(bool decision_boundary) {
  sim::Controls controls;
  const auto& ego = world_.ego();
  for (const auto& v : world_.vehicles) {
    if (v.id == world_.ego_id) continue;
    auto bit = behaviors_.behaviors.find(v.id);
    if (bit == behaviors_.behaviors.end()) continue;
    auto& b = bit->second;
    sim::VehicleControl ctrl;

    switch (b.kind) {
      case scenario::BehaviorKind::IdmLaneKeep: {
        sim::IdmParams p;
        p.desired_speed = b.desired_speed;
        ctrl.accel = idm_or_emergency(world_, v, p);
        if (b.random_lane_change && decision_boundary && !v.lc) {
          if (rng_.bernoulli(0.02)) {
            int candidates[2];
            int n = 0;
            for (const auto dir : {sim::LcDirection::Left, sim::LcDirection::Right}) {
              const int target = v.lane_index + sim::lane_delta(dir);
              if (world_.road.has_lane(target) &&
                  !lane_interval_occupied(world_, v.id, target, v.s, 5.0, 5.0))
                candidates[n++] = static_cast<int>(dir);
            }
            if (n > 0) {
              const int pick = n == 1 ? 0 : rng_.uniform_int(0, n - 1);
              ctrl.lane_change = static_cast<sim::LcDirection>(candidates[pick]);
            }
          }
        }
        break;
      }
      case scenario::BehaviorKind::ConstantSpeed:
        break;  // accel 0, holds its speed
      case scenario::BehaviorKind::TriggeredSpawn:
        break;  // stationary once spawned
      case scenario::BehaviorKind::TriggeredCutIn:
        if (b.trigger_distance > 0.0 && !v.lc && v.s - ego.s <= b.trigger_distance) {
          ctrl.lane_change = b.cut_in_direction;
          b.trigger_distance = 0.0;  // fires once
        }
        break;
    }
    controls[v.id] = ctrl;
  }
  return controls;
}

StepOutcome Environment::step(Action action) {
  if (done_) throw std::logic_error("Environment::step: episode is done");

  StepOutcome out;
  const Action masked = cfg_.rule_mask_enabled ? rule_mask(world_, action, cfg_) : action;
  out.info.masked_action = masked;

  bool issue_command = false;
  sim::LcDirection command{};
  if (masked != Action::Keep) {
    const auto& ego = world_.ego();
    if (!ego.lc) {  // a command during an ongoing change is ignored
      out.info.lane_change_executed = true;  // the penalty binds at initiation
      const int target = sim::membership_lane(ego) + sim::lane_delta(to_direction(masked));
      if (world_.road.has_lane(target) && direction_allowed(cfg_, masked)) {
        issue_command = true;
        command = to_direction(masked);
        ++lane_change_count_;
      }
    }
  }

  const int substeps = static_cast<int>(std::lround(cfg_.decision_period / cfg_.substep_dt));
  const double s_before = world_.ego().s;
  double speed_sum = 0.0;
  int executed = 0;

  sim::IdmParams ego_idm;
  ego_idm.desired_speed = v_target();

  for (int i = 0; i < substeps; ++i) {
    fire_pending_spawns();

    sim::Controls controls = social_controls(i == 0);
    sim::VehicleControl ego_ctrl;
    ego_ctrl.accel = idm_or_emergency(world_, world_.ego(), ego_idm);
    if (i == 0 && issue_command) ego_ctrl.lane_change = command;
    controls[world_.ego_id] = ego_ctrl;

    world_ = sim::step(world_, cfg_.substep_dt, controls);
    ++executed;

    const auto& ego = world_.ego();
    speed_sum += ego.speed;
    out.info.max_abs_accel = std::max(out.info.max_abs_accel, std::abs(ego.accel));

    for (const auto& [a, b] : sim::collision_pairs(world_)) {
      if (a == world_.ego_id || b == world_.ego_id) {
        collided_ = true;
        break;
      }
    }
    if (collided_) break;
    if (ego.s >= world_.road.segment_length || world_.time >= cfg_.timeout - 1e-9) {
      done_ = true;
      break;
    }
  }
  max_abs_accel_episode_ = std::max(max_abs_accel_episode_, out.info.max_abs_accel);
  if (collided_) done_ = true;

  out.info.collided = collided_;
  out.info.distance = world_.ego().s - s_before;
  out.info.speed = world_.ego().speed;
  out.done = done_;
  out.reward = compute_reward(speed_sum / executed, out.info.lane_change_executed,
                              collided_, v_target());
  last_obs_ = rasterize(world_);
  out.observation = last_obs_;
  return out;
}

}  // namespace lcbench::env
