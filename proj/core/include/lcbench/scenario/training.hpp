#pragma once

#include <cstdint>

#include "lcbench/scenario/behavior.hpp"

namespace lcbench::scenario {

/// Random traffic generation settings for the training scenario.
struct TrainingConfig {
  int social_count_min = 6;
  int social_count_max = 12;
  double spawn_behind = 30.0;        // m behind the ego
  double spawn_ahead = 180.0;        // m in front of the ego
  double ego_target_speed_kmh = 60.0;
  double ego_initial_speed_kmh = 20.0;
  double social_speed_min_kmh = 20.0;
  double social_speed_max_kmh = 40.0;
  double follow_gap_min = 0.0;       // m, bumper-to-bumper within a chain
  double follow_gap_max = 15.0;
  bool social_random_lc = true;
  int lane_count = 3;
  double segment_length = 450.0;
  double ego_start_s = 50.0;
};

/// The stochastic test uses the training setup with fewer vehicles and no
/// social lane changes.
struct StochasticTestConfig {
  TrainingConfig base;
  StochasticTestConfig() {
    base.social_count_min = 4;
    base.social_count_max = 9;
    base.social_random_lc = false;
  }
};

GeneratedWorld gen_training(std::uint64_t seed, const TrainingConfig& cfg);
GeneratedWorld gen_stochastic_test(std::uint64_t seed, const StochasticTestConfig& cfg);

}  // namespace lcbench::scenario
