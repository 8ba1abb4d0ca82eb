#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "lcbench/sim/types.hpp"

namespace lcbench::env {

inline constexpr int kObsSize = 64;
inline constexpr int kObsChannels = 3;
inline constexpr double kWindowAhead = 50.0;   // m in front of the ego
inline constexpr double kWindowBehind = 25.0;  // m behind

struct Rgb {
  std::uint8_t r, g, b;
  bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kColorEgo{0, 0, 255};
inline constexpr Rgb kColorSocial{0, 255, 0};
inline constexpr Rgb kColorLine{255, 0, 0};
inline constexpr Rgb kColorSidewalk{128, 128, 128};
inline constexpr Rgb kColorRoad{0, 0, 0};

/// Ego-centered bird's-eye-view raster, 64x64 RGB, row 0 at the front edge
/// of the window. Every pixel is one of the five palette colors.
struct Observation {
  std::array<std::uint8_t, kObsSize * kObsSize * kObsChannels> pixels{};

  Rgb at(int row, int col) const {
    const int i = (row * kObsSize + col) * kObsChannels;
    return {pixels[i], pixels[i + 1], pixels[i + 2]};
  }
  void set(int row, int col, Rgb c) {
    const int i = (row * kObsSize + col) * kObsChannels;
    pixels[i] = c.r;
    pixels[i + 1] = c.g;
    pixels[i + 2] = c.b;
  }
  bool operator==(const Observation&) const = default;
};

/// Renders the world into the ego window: [ego_s - 25, ego_s + 50]
/// longitudinally (front at the top) and the full road-plus-sidewalk extent
/// laterally. Pixel-center point sampling; vehicles over lane lines over
/// sidewalk over road.
Observation rasterize(const sim::WorldState& world);

/// Binary PPM (P6) encoding, the lossless frame-dump format.
std::string to_ppm(const Observation& obs);
Observation from_ppm(const std::string& bytes);

}  // namespace lcbench::env
