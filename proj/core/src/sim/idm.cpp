#include "lcbench/sim/idm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcbench::sim {

double idm_acceleration(double ego_speed, const std::optional<Leader>& leader,
                        const IdmParams& p) {
  if (ego_speed < 0.0) throw std::invalid_argument("idm: negative ego speed");

  const double v = ego_speed;
  double a = p.max_accel * (1.0 - std::pow(v / p.desired_speed, p.accel_exponent));

  if (leader) {
    if (leader->gap <= 0.0)
      throw std::invalid_argument("idm: non-positive gap to leader");
    const double dv = v - leader->speed;
    // Desired gap. The dynamic part is floored at zero so that a receding
    // leader cannot shrink the desired gap below s0, which also keeps the
    // response monotone in ego speed.
    const double dynamic =
        v * p.time_headway + v * dv / (2.0 * std::sqrt(p.max_accel * p.comfort_decel));
    const double s_star = p.min_gap + std::max(0.0, dynamic);
    const double ratio = s_star / leader->gap;
    a -= p.max_accel * ratio * ratio;
  }

  return std::clamp(a, -p.hard_brake, p.max_accel);
}

}  // namespace lcbench::sim
