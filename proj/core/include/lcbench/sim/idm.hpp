#pragma once

#include <optional>

namespace lcbench::sim {

/// Intelligent Driver Model parameters. All strictly positive,
/// accel_exponent >= 1.
struct IdmParams {
  double desired_speed = 16.666666666666668;  // v0, m/s (60 km/h)
  double max_accel = 1.5;                     // a_max, m/s^2
  double comfort_decel = 2.0;                 // b, m/s^2
  double min_gap = 2.0;                       // s0, m
  double time_headway = 1.0;                  // T, s
  double accel_exponent = 4.0;                // delta
  double hard_brake = 6.0;                    // clamp floor, m/s^2
};

/// A leading vehicle seen through a bumper-to-bumper gap.
struct Leader {
  double gap;    // m, > 0
  double speed;  // m/s
};

/// IDM longitudinal acceleration. No leader means free road. The result is
/// clamped to [-hard_brake, max_accel]. Throws std::invalid_argument when a
/// leader is given with gap <= 0 (the caller must treat that state as
/// already collided) or when ego_speed < 0.
double idm_acceleration(double ego_speed, const std::optional<Leader>& leader,
                        const IdmParams& p);

}  // namespace lcbench::sim
