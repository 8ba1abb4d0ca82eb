#pragma once

#include <string>
#include <vector>

#include "lcbench/scenario/behavior.hpp"

namespace lcbench::scenario {

enum class ScenarioClass { A, B, C, D, E };

char class_letter(ScenarioClass c);

/// One target vehicle in a deterministic scenario. Offsets are longitudinal
/// distances from the test vehicle, positive ahead.
struct Placement {
  std::string role;  // "GV1", "GV2"
  int lane = 0;
  double offset_m = 0.0;
  double speed_kmh = 0.0;
  BehaviorKind behavior = BehaviorKind::ConstantSpeed;
  double trigger_m = 0.0;  // triggered behaviors only
};

/// A fully instantiated logical-scenario cell: no randomness remains.
struct DeterministicScenario {
  int id = 0;
  ScenarioClass cls = ScenarioClass::A;
  int lane_count = 2;
  int tv_lane = 0;
  double tv_initial_speed_kmh = 40.0;
  double tv_target_speed_kmh = 60.0;
  bool allow_left = true;
  bool allow_right = true;
  std::vector<Placement> placements;

  bool operator==(const DeterministicScenario&) const = default;
};

struct ScenarioSet {
  std::vector<DeterministicScenario> scenarios;

  int count_of(ScenarioClass c) const;
};

/// The full 422-cell deterministic test suite with stable ids and ordering:
/// classes A(10), B(30), C(231), D(126), E(25).
ScenarioSet enumerate_deterministic();

/// Expands a scenario to its initial world and behavior table. Triggered
/// behaviors are armed but not fired. Throws std::invalid_argument when a
/// placement falls outside the road segment.
GeneratedWorld instantiate(const DeterministicScenario& scn);

/// One human-readable JSON record per scenario, newline terminated.
std::string to_record(const DeterministicScenario& scn);
DeterministicScenario from_record(const std::string& line);

std::string serialize_set(const ScenarioSet& set);
ScenarioSet parse_set(const std::string& text);

}  // namespace lcbench::scenario
