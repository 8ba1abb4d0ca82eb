#include "lcbench/env/reward.hpp"

#include <stdexcept>

namespace lcbench::env {

RewardBreakdown compute_reward(double avg_speed, bool lane_change_executed,
                               bool collided, double v_target) {
  if (avg_speed < 0.0 || v_target <= 0.0)
    throw std::invalid_argument("compute_reward: bad speed arguments");

  RewardBreakdown r;
  r.r_c = collided ? -1.0 : 0.0;
  if (lane_change_executed) {
    r.r_l = -1.0;
    r.total = r.r_l + r.r_c;
  } else {
    r.r_v = 0.2 * avg_speed / v_target;
    r.total = r.r_v + r.r_c;
  }
  return r;
}

}  // namespace lcbench::env
