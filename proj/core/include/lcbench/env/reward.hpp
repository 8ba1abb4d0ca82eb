#pragma once

namespace lcbench::env {

/// Per-decision reward decomposition: speed term r_v, lane-change penalty
/// r_l, collision penalty r_c. Lane changing suppresses the speed term.
struct RewardBreakdown {
  double r_v = 0.0;
  double r_l = 0.0;
  double r_c = 0.0;
  double total = 0.0;
};

RewardBreakdown compute_reward(double avg_speed, bool lane_change_executed,
                               bool collided, double v_target);

}  // namespace lcbench::env
