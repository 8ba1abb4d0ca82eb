#include "lcbench/env/observation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lcbench::env {

Observation rasterize(const sim::WorldState& world) {
  const auto& road = world.road;
  const sim::VehicleState& ego = world.ego();

  const double window_len = kWindowAhead + kWindowBehind;
  const double row_px = window_len / kObsSize;
  const double y_max = road.total_lane_width() + road.sidewalk_width;
  const double y_min = -road.sidewalk_width;
  const double col_px = (y_max - y_min) / kObsSize;

  // Pixel centers in window-relative coordinates: rows run front (top) to
  // back, columns run left (high y) to right.
  double row_rel[kObsSize];
  double col_y[kObsSize];
  for (int r = 0; r < kObsSize; ++r) row_rel[r] = kWindowAhead - (r + 0.5) * row_px;
  for (int c = 0; c < kObsSize; ++c) col_y[c] = y_max - (c + 0.5) * col_px;

  // Columns holding the 1-pixel lane boundary lines.
  bool line_col[kObsSize] = {};
  for (int k = 0; k <= road.lane_count; ++k) {
    const double yb = k * road.lane_width;
    const int c = static_cast<int>(std::floor((y_max - yb) / col_px));
    if (c >= 0 && c < kObsSize) line_col[c] = true;
  }

  Observation obs;
  for (int r = 0; r < kObsSize; ++r) {
    for (int c = 0; c < kObsSize; ++c) {
      const double rel = row_rel[r];
      const double y = col_y[c];

      Rgb color = kColorRoad;
      if (y < 0.0 || y > road.total_lane_width()) color = kColorSidewalk;
      if (line_col[c]) color = kColorLine;

      for (const auto& v : world.vehicles) {
        const double vrel = v.s - ego.s;
        if (rel < vrel - 0.5 * v.length || rel >= vrel + 0.5 * v.length) continue;
        if (y < v.y - 0.5 * v.width || y >= v.y + 0.5 * v.width) continue;
        color = (v.id == world.ego_id) ? kColorEgo : kColorSocial;
        if (v.id == world.ego_id) break;  // ego is drawn on top
      }
      obs.set(r, c, color);
    }
  }
  return obs;
}

std::string to_ppm(const Observation& obs) {
  std::string out = "P6\n64 64\n255\n";
  out.append(reinterpret_cast<const char*>(obs.pixels.data()), obs.pixels.size());
  return out;
}

Observation from_ppm(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (magic != "P6" || w != kObsSize || h != kObsSize || maxval != 255)
    throw std::invalid_argument("from_ppm: not a 64x64 P6 image");
  in.get();  // single whitespace after maxval
  Observation obs;
  in.read(reinterpret_cast<char*>(obs.pixels.data()),
          static_cast<std::streamsize>(obs.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(obs.pixels.size()))
    throw std::invalid_argument("from_ppm: truncated pixel data");
  return obs;
}

}  // namespace lcbench::env
