#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace lcbench::sim {

using VehicleId = std::int32_t;

inline constexpr double kLaneWidth = 3.5;        // m
inline constexpr double kVehicleLength = 4.5;    // m
inline constexpr double kVehicleWidth = 2.0;     // m
inline constexpr double kLaneChangeDuration = 2.0;  // s
inline constexpr double kSimDt = 0.1;            // s, fixed integration step

inline constexpr double kmh_to_ms(double kmh) { return kmh / 3.6; }
inline constexpr double ms_to_kmh(double ms) { return ms * 3.6; }

/// Straight multi-lane highway segment. Lane 0 is the rightmost lane;
/// lateral position y grows to the left. One lane-width sidewalk per side.
struct RoadModel {
  int lane_count = 3;               // 2 or 3
  double lane_width = kLaneWidth;   // m
  double segment_length = 450.0;    // m
  double sidewalk_width = kLaneWidth;

  double centerline(int lane) const { return (lane + 0.5) * lane_width; }
  bool has_lane(int lane) const { return lane >= 0 && lane < lane_count; }
  double total_lane_width() const { return lane_count * lane_width; }
};

enum class LcDirection { Left, Right };

inline int lane_delta(LcDirection d) { return d == LcDirection::Left ? +1 : -1; }

/// Active lane-change execution state. progress runs 0 -> 1 over the fixed
/// lane-change duration; lateral position ramps linearly between the source
/// and target centerlines.
struct LaneChange {
  LcDirection direction;
  double progress = 0.0;
  int from_lane = 0;
  int to_lane = 0;
};

struct VehicleState {
  VehicleId id = 0;
  double s = 0.0;       // longitudinal position of the center, m
  double y = 0.0;       // lateral position of the center, m
  double speed = 0.0;   // m/s, >= 0
  double accel = 0.0;   // m/s^2, last applied longitudinal acceleration
  int lane_index = 0;   // membership lane (target lane once progress >= 0.5)
  std::optional<LaneChange> lc;
  double length = kVehicleLength;
  double width = kVehicleWidth;

  bool changing_lane() const { return lc.has_value(); }
};

struct WorldState {
  double time = 0.0;  // s
  RoadModel road;
  std::vector<VehicleState> vehicles;
  VehicleId ego_id = 0;

  const VehicleState* find(VehicleId id) const {
    for (const auto& v : vehicles)
      if (v.id == id) return &v;
    return nullptr;
  }
  VehicleState* find(VehicleId id) {
    for (auto& v : vehicles)
      if (v.id == id) return &v;
    return nullptr;
  }
  const VehicleState& ego() const { return *find(ego_id); }
};

/// Per-vehicle command applied over one integration step.
struct VehicleControl {
  double accel = 0.0;
  std::optional<LcDirection> lane_change;
};

}  // namespace lcbench::sim
