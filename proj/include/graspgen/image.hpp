// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRASPGEN_IMAGE_HPP
#define GRASPGEN_IMAGE_HPP

#include <cstdint>
#include <vector>

#include "graspgen/error.hpp"
#include "graspgen/math.hpp"

namespace graspgen {

struct rgb {
  double r = 0.0, g = 0.0, b = 0.0;
};

inline rgb operator*(const rgb& a, double s) { return {a.r * s, a.g * s, a.b * s}; }
inline rgb operator*(const rgb& a, const rgb& b) {
  return {a.r * b.r, a.g * b.g, a.b * b.b};
}
inline rgb operator+(const rgb& a, const rgb& b) {
  return {a.r + b.r, a.g + b.g, a.b + b.b};
}
inline bool operator==(const rgb& a, const rgb& b) {
  return a.r == b.r && a.g == b.g && a.b == b.b;
}

inline rgb clamp01(const rgb& c) {
  auto clamp = [](double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); };
  return {clamp(c.r), clamp(c.g), clamp(c.b)};
}

// Dense row-major image.
template <typename T>
struct image {
  int width = 0, height = 0;
  std::vector<T> pixels;

  image() = default;
  image(int w, int h, T fill = T{}) : width(w), height(h) {
    if (w <= 0 || h <= 0)
      throw error(errc::invalid_config, "image dimensions must be positive");
    pixels.assign(size_t(w) * size_t(h), fill);
  }

  T& at(int x, int y) { return pixels[size_t(y) * size_t(width) + size_t(x)]; }
  const T& at(int x, int y) const {
    return pixels[size_t(y) * size_t(width) + size_t(x)];
  }
  bool contains(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
};

using image_rgb = image<rgb>;        // linear [0,1] floats
using image_depth = image<double>;   // meters, 0.0 = no hit
using image_labels = image<uint8_t>; // segmentation labels

// Quantization used for all 8-bit PNG output: clamp to [0,1], then
// round half up.
inline uint8_t quantize8(double v) {
  v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  return uint8_t(std::floor(v * 255.0 + 0.5));
}

// Depth quantization: meters to integer millimeters, round half up,
// saturating at 65535. 0 stays the no-hit sentinel (real depths are
// strictly positive).
inline uint16_t quantize_depth_mm(double meters) {
  if (meters <= 0.0) return 0;
  double mm = std::floor(meters * 1000.0 + 0.5);
  return mm >= 65535.0 ? uint16_t(65535) : uint16_t(mm);
}

}  // namespace graspgen

#endif
