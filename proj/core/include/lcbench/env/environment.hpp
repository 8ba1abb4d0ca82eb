#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcbench/env/observation.hpp"
#include "lcbench/env/reward.hpp"
#include "lcbench/rng.hpp"
#include "lcbench/scenario/behavior.hpp"
#include "lcbench/sim/world.hpp"

namespace lcbench::env {

enum class Action { Keep, Left, Right };

inline const char* action_name(Action a) {
  switch (a) {
    case Action::Keep: return "keep";
    case Action::Left: return "left";
    case Action::Right: return "right";
  }
  return "?";
}

struct EnvConfig {
  double decision_period = 1.0;       // s, one action held per period
  double substep_dt = sim::kSimDt;    // s
  double v_target_kmh = 60.0;
  double timeout = 90.0;              // s of simulated time
  bool rule_mask_enabled = false;     // evaluation only, never in training
  double mask_gap_front = 5.0;        // m
  double mask_gap_rear = 5.0;         // m
  bool allow_left = true;             // road legality for deterministic tests
  bool allow_right = true;
};

struct StepInfo {
  bool collided = false;
  double distance = 0.0;        // ego travel within the period, m
  double speed = 0.0;           // ego speed at period end, m/s
  bool lane_change_executed = false;
  double max_abs_accel = 0.0;   // over the period's substeps, m/s^2
  Action masked_action = Action::Keep;
};

struct StepOutcome {
  Observation observation;
  RewardBreakdown reward;
  bool done = false;
  StepInfo info;
};

/// Replaces a lane-change action by Keep when the target lane does not
/// exist (or is not allowed) or when any vehicle in the target lane overlaps
/// the interval [ego_s - gap_rear, ego_s + gap_front].
Action rule_mask(const sim::WorldState& world, Action proposed, const EnvConfig& cfg);

/// The lane-change MDP: holds one discrete action per decision period,
/// simulating at the fixed substep underneath. Longitudinal control of the
/// ego is IDM toward the target speed against its lane leader; social
/// vehicles follow their behavior table.
class Environment {
 public:
  explicit Environment(EnvConfig cfg) : cfg_(cfg) {}

  /// Starts an episode from a generated world. Returns the first observation.
  const Observation& reset(const scenario::GeneratedWorld& start);

  /// Applies one action for a full decision period. Episode must not be done.
  StepOutcome step(Action action);

  const sim::WorldState& world() const { return world_; }
  bool done() const { return done_; }
  const EnvConfig& config() const { return cfg_; }
  double v_target() const { return sim::kmh_to_ms(cfg_.v_target_kmh); }
  int initial_lane() const { return initial_lane_; }
  int lane_change_count() const { return lane_change_count_; }
  double max_abs_accel_episode() const { return max_abs_accel_episode_; }
  bool collided() const { return collided_; }
  double start_s() const { return start_s_; }

 private:
  sim::Controls social_controls(bool decision_boundary);
  void fire_pending_spawns();

  EnvConfig cfg_;
  sim::WorldState world_;
  scenario::BehaviorTable behaviors_;
  Rng rng_{0};
  Observation last_obs_;
  bool done_ = true;
  bool collided_ = false;
  int initial_lane_ = 0;
  int lane_change_count_ = 0;
  double max_abs_accel_episode_ = 0.0;
  double start_s_ = 0.0;
};

}  // namespace lcbench::env
