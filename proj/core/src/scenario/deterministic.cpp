#include "lcbench/scenario/deterministic.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace lcbench::scenario {

using ordered_json = nlohmann::ordered_json;

char class_letter(ScenarioClass c) {
  switch (c) {
    case ScenarioClass::A: return 'A';
    case ScenarioClass::B: return 'B';
    case ScenarioClass::C: return 'C';
    case ScenarioClass::D: return 'D';
    case ScenarioClass::E: return 'E';
  }
  return '?';
}

namespace {

ScenarioClass class_from_letter(char c) {
  switch (c) {
    case 'A': return ScenarioClass::A;
    case 'B': return ScenarioClass::B;
    case 'C': return ScenarioClass::C;
    case 'D': return ScenarioClass::D;
    case 'E': return ScenarioClass::E;
  }
  throw std::invalid_argument("unknown scenario class");
}

std::string behavior_name(BehaviorKind k) {
  switch (k) {
    case BehaviorKind::IdmLaneKeep: return "idm";
    case BehaviorKind::ConstantSpeed: return "constant";
    case BehaviorKind::TriggeredSpawn: return "spawn";
    case BehaviorKind::TriggeredCutIn: return "cut-in";
  }
  return "?";
}

BehaviorKind behavior_from_name(const std::string& s) {
  if (s == "idm") return BehaviorKind::IdmLaneKeep;
  if (s == "constant") return BehaviorKind::ConstantSpeed;
  if (s == "spawn") return BehaviorKind::TriggeredSpawn;
  if (s == "cut-in") return BehaviorKind::TriggeredCutIn;
  throw std::invalid_argument("unknown behavior kind: " + s);
}

constexpr double kTvStartS = 50.0;
constexpr double kDetSegmentLength = 450.0;

// Parameter grids for the five logical classes. These are versioned
// constants of the benchmark: the serialized scenario file is the contract
// and enumerate_deterministic() must keep reproducing it byte for byte.
constexpr double kGridAV1[] = {0, 10};
constexpr double kGridAD[] = {20, 30, 40, 50, 60};
constexpr double kGridBV1[] = {10, 20, 30};
constexpr double kGridBD[] = {15, 20, 25, 30, 35, 40, 45, 50, 55, 60};
constexpr double kGridCV1[] = {20, 30, 40};
constexpr double kGridCD[] = {15, 20, 25, 30, 35, 40, 50};
constexpr double kGridCd[] = {-25, -20, -15, -10, -5, 0, 5, 10, 15, 20, 25};
constexpr double kGridCV2 = 30;
constexpr double kGridDV1[] = {20, 30, 40};
constexpr double kGridDd[] = {10, 15, 20, 25, 30, 35, 40};
constexpr double kGridDTrig[] = {20, 25, 30, 35, 40, 45};
constexpr double kGridED[] = {30, 40, 50, 60, 70};
constexpr double kGridETrig[] = {20, 30, 40, 50, 60};

}  // namespace

int ScenarioSet::count_of(ScenarioClass c) const {
  int n = 0;
  for (const auto& s : scenarios)
    if (s.cls == c) ++n;
  return n;
}

ScenarioSet enumerate_deterministic() {
  ScenarioSet set;
  int id = 0;

  // Class A: two-lane overtake of a slow or stopped leader.
  for (double v1 : kGridAV1) {
    for (double D : kGridAD) {
      DeterministicScenario s;
      s.id = id++;
      s.cls = ScenarioClass::A;
      s.lane_count = 2;
      s.tv_lane = 0;
      s.allow_left = true;
      s.allow_right = false;
      s.placements.push_back({"GV1", 0, D, v1, BehaviorKind::ConstantSpeed, 0.0});
      set.scenarios.push_back(std::move(s));
    }
  }

  // Class B: three-lane overtake with both adjacent lanes free.
  for (double v1 : kGridBV1) {
    for (double D : kGridBD) {
      DeterministicScenario s;
      s.id = id++;
      s.cls = ScenarioClass::B;
      s.lane_count = 3;
      s.tv_lane = 1;
      s.placements.push_back({"GV1", 1, D, v1, BehaviorKind::ConstantSpeed, 0.0});
      set.scenarios.push_back(std::move(s));
    }
  }

  // Class C: slow leader ahead plus traffic in the left lane, right lane
  // empty; the agent must pick a side.
  for (double v1 : kGridCV1) {
    for (double D : kGridCD) {
      for (double d : kGridCd) {
        DeterministicScenario s;
        s.id = id++;
        s.cls = ScenarioClass::C;
        s.lane_count = 3;
        s.tv_lane = 1;
        s.placements.push_back({"GV1", 1, D, v1, BehaviorKind::ConstantSpeed, 0.0});
        s.placements.push_back({"GV2", 2, d, kGridCV2, BehaviorKind::ConstantSpeed, 0.0});
        set.scenarios.push_back(std::move(s));
      }
    }
  }

  // Class D: a slower vehicle in the left lane cuts in ahead of the test
  // vehicle once the gap closes to the trigger distance. The test vehicle
  // starts at traffic speed V1.
  for (double v1 : kGridDV1) {
    for (double d : kGridDd) {
      for (double trig : kGridDTrig) {
        DeterministicScenario s;
        s.id = id++;
        s.cls = ScenarioClass::D;
        s.lane_count = 3;
        s.tv_lane = 1;
        s.tv_initial_speed_kmh = v1;
        s.placements.push_back({"GV1", 2, d, v1, BehaviorKind::TriggeredCutIn, trig});
        set.scenarios.push_back(std::move(s));
      }
    }
  }

  // Class E: sudden appearance of a stationary vehicle on a two-lane road.
  for (double D : kGridED) {
    for (double trig : kGridETrig) {
      DeterministicScenario s;
      s.id = id++;
      s.cls = ScenarioClass::E;
      s.lane_count = 2;
      s.tv_lane = 0;
      s.allow_left = true;
      s.allow_right = false;
      s.placements.push_back({"GV1", 0, D, 0.0, BehaviorKind::TriggeredSpawn, trig});
      set.scenarios.push_back(std::move(s));
    }
  }

  return set;
}

GeneratedWorld instantiate(const DeterministicScenario& scn) {
  GeneratedWorld out;
  out.seed = static_cast<std::uint64_t>(scn.id);
  out.behavior_seed = static_cast<std::uint64_t>(scn.id);

  sim::WorldState& world = out.world;
  world.road.lane_count = scn.lane_count;
  world.road.segment_length = kDetSegmentLength;

  sim::VehicleState tv;
  tv.id = 0;
  tv.lane_index = scn.tv_lane;
  tv.s = kTvStartS;
  tv.y = world.road.centerline(scn.tv_lane);
  tv.speed = sim::kmh_to_ms(scn.tv_initial_speed_kmh);
  world.vehicles.push_back(tv);
  world.ego_id = 0;

  sim::VehicleId next_id = 1;
  for (const auto& p : scn.placements) {
    if (!world.road.has_lane(p.lane))
      throw std::invalid_argument("instantiate: placement lane outside road");
    const double s = kTvStartS + p.offset_m;
    if (s < sim::kVehicleLength || s > kDetSegmentLength - sim::kVehicleLength)
      throw std::invalid_argument("instantiate: placement outside segment bounds");

    sim::VehicleState v;
    v.id = next_id++;
    v.lane_index = p.lane;
    v.s = s;
    v.y = world.road.centerline(p.lane);
    v.speed = sim::kmh_to_ms(p.speed_kmh);

    SocialBehavior b;
    b.desired_speed = v.speed;
    b.trigger_distance = p.trigger_m;
    switch (p.behavior) {
      case BehaviorKind::IdmLaneKeep:
        b.kind = BehaviorKind::IdmLaneKeep;
        world.vehicles.push_back(v);
        break;
      case BehaviorKind::ConstantSpeed:
        b.kind = BehaviorKind::ConstantSpeed;
        world.vehicles.push_back(v);
        break;
      case BehaviorKind::TriggeredSpawn:
        b.kind = BehaviorKind::TriggeredSpawn;
        out.behaviors.pending_spawns.push_back({v, p.trigger_m});
        break;
      case BehaviorKind::TriggeredCutIn:
        b.kind = BehaviorKind::TriggeredCutIn;
        b.cut_in_direction =
            p.lane > scn.tv_lane ? sim::LcDirection::Right : sim::LcDirection::Left;
        world.vehicles.push_back(v);
        break;
    }
    out.behaviors.behaviors[v.id] = b;
  }
  return out;
}

std::string to_record(const DeterministicScenario& scn) {
  ordered_json j;
  j["id"] = scn.id;
  j["class"] = std::string(1, class_letter(scn.cls));
  j["lanes"] = scn.lane_count;
  j["tv_lane"] = scn.tv_lane;
  j["tv_speed_kmh"] = scn.tv_initial_speed_kmh;
  j["tv_target_kmh"] = scn.tv_target_speed_kmh;
  std::string allowed;
  if (scn.allow_left) allowed += 'L';
  if (scn.allow_right) allowed += 'R';
  j["allowed"] = allowed;
  ordered_json ps = ordered_json::array();
  for (const auto& p : scn.placements) {
    ordered_json pj;
    pj["role"] = p.role;
    pj["lane"] = p.lane;
    pj["offset_m"] = p.offset_m;
    pj["speed_kmh"] = p.speed_kmh;
    pj["behavior"] = behavior_name(p.behavior);
    if (p.trigger_m != 0.0) pj["trigger_m"] = p.trigger_m;
    ps.push_back(std::move(pj));
  }
  j["placements"] = std::move(ps);
  return j.dump();
}

DeterministicScenario from_record(const std::string& line) {
  const auto j = ordered_json::parse(line);
  DeterministicScenario s;
  s.id = j.at("id").get<int>();
  s.cls = class_from_letter(j.at("class").get<std::string>().at(0));
  s.lane_count = j.at("lanes").get<int>();
  s.tv_lane = j.at("tv_lane").get<int>();
  s.tv_initial_speed_kmh = j.at("tv_speed_kmh").get<double>();
  s.tv_target_speed_kmh = j.at("tv_target_kmh").get<double>();
  const auto allowed = j.at("allowed").get<std::string>();
  s.allow_left = allowed.find('L') != std::string::npos;
  s.allow_right = allowed.find('R') != std::string::npos;
  for (const auto& pj : j.at("placements")) {
    Placement p;
    p.role = pj.at("role").get<std::string>();
    p.lane = pj.at("lane").get<int>();
    p.offset_m = pj.at("offset_m").get<double>();
    p.speed_kmh = pj.at("speed_kmh").get<double>();
    p.behavior = behavior_from_name(pj.at("behavior").get<std::string>());
    p.trigger_m = pj.value("trigger_m", 0.0);
    s.placements.push_back(std::move(p));
  }
  return s;
}

std::string serialize_set(const ScenarioSet& set) {
  std::string out;
  for (const auto& s : set.scenarios) {
    out += to_record(s);
    out += '\n';
  }
  return out;
}

ScenarioSet parse_set(const std::string& text) {
  ScenarioSet set;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    set.scenarios.push_back(from_record(line));
  }
  return set;
}

}  // namespace lcbench::scenario
