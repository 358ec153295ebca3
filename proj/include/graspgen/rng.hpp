// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random number utilities. Dataset generation must be
// reproducible bit-for-bit across runs and worker counts, so all sampling
// goes through this self-contained splitmix64 generator instead of the
// implementation-defined std:: distributions.

#ifndef GRASPGEN_RNG_HPP
#define GRASPGEN_RNG_HPP

#include <cstdint>

#include "graspgen/math.hpp"

namespace graspgen {

// Finalizer of the splitmix64 generator; also usable as a standalone
// 64-bit mixing hash.
inline uint64_t splitmix64_mix(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class splitmix64 {
 public:
  explicit splitmix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return double(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform integer in [0, n).
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  // Uniform point inside the ball of given radius, by rejection.
  vec3 next_in_ball(double radius) {
    for (;;) {
      vec3 p = {next_double(-1.0, 1.0), next_double(-1.0, 1.0),
                next_double(-1.0, 1.0)};
      if (length_squared(p) <= 1.0) return p * radius;
    }
  }

  // Uniform direction on the unit sphere, by rejection.
  vec3 next_unit_vector() {
    for (;;) {
      vec3 p = {next_double(-1.0, 1.0), next_double(-1.0, 1.0),
                next_double(-1.0, 1.0)};
      double l2 = length_squared(p);
      if (l2 > 1e-12 && l2 <= 1.0) return p / std::sqrt(l2);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace graspgen

#endif
