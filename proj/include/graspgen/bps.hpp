// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Basis point set encoding of point clouds: a cloud is represented by the
// distance from each of a fixed set of basis points to its nearest cloud
// point. The basis is sampled once, seeded, and reused for every cloud.

#ifndef GRASPGEN_BPS_HPP
#define GRASPGEN_BPS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "graspgen/error.hpp"
#include "graspgen/math.hpp"
#include "graspgen/rng.hpp"

namespace graspgen {

struct basis_point_set {
  std::vector<vec3> basis_points;
  uint64_t seed = 0;
};

// Samples `count` basis points uniformly inside the ball of given radius
// centered at `center`. Same seed and bounds give identical points.
inline basis_point_set make_basis_point_set(uint64_t seed, int count,
                                            double radius,
                                            const vec3& center = {0, 0, 0}) {
  if (count <= 0)
    throw error(errc::empty_input, "basis point count must be positive");
  basis_point_set bps;
  bps.seed = seed;
  bps.basis_points.reserve(size_t(count));
  splitmix64 rng(seed);
  for (int i = 0; i < count; i++)
    bps.basis_points.push_back(center + rng.next_in_ball(radius));
  return bps;
}

// Nearest-distance from one query point to a cloud. sqrt(min d^2) equals
// min sqrt(d^2) exactly since sqrt is monotone, so this matches a per-pair
// sqrt double loop bit-for-bit.
inline double nearest_distance(const vec3& query, std::span<const vec3> cloud) {
  double best = std::numeric_limits<double>::infinity();
  for (const vec3& p : cloud) {
    double d2 = length_squared(query - p);
    if (d2 < best) best = d2;
  }
  return std::sqrt(best);
}

// Per-basis-point nearest distance to the cloud, in meters.
inline std::vector<double> bps_encode(std::span<const vec3> cloud,
                                      const basis_point_set& basis) {
  if (cloud.empty())
    throw error(errc::empty_input, "bps_encode: empty point cloud");
  std::vector<double> encoding;
  encoding.reserve(basis.basis_points.size());
  for (const vec3& b : basis.basis_points)
    encoding.push_back(nearest_distance(b, cloud));
  return encoding;
}

// Per-hand-vertex nearest distance to any probe vertex, in meters.
inline std::vector<double> hand_object_distances(
    std::span<const vec3> hand_vertices, std::span<const vec3> probe_vertices) {
  if (hand_vertices.empty())
    throw error(errc::empty_input, "hand_object_distances: empty hand cloud");
  if (probe_vertices.empty())
    throw error(errc::empty_input, "hand_object_distances: empty probe cloud");
  std::vector<double> distances;
  distances.reserve(hand_vertices.size());
  for (const vec3& v : hand_vertices)
    distances.push_back(nearest_distance(v, probe_vertices));
  return distances;
}

}  // namespace graspgen

#endif
