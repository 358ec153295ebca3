// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Sphere-based camera viewpoint sampling. The sphere is split into latitude
// floors sized so that disjoint surface circles of radius r_circ fit; each
// floor holds evenly spaced azimuths, with optional pole viewpoints.

#ifndef GRASPGEN_VIEWSPHERE_HPP
#define GRASPGEN_VIEWSPHERE_HPP

#include <set>
#include <vector>

#include "graspgen/error.hpp"
#include "graspgen/math.hpp"

namespace graspgen {

struct sphere_config {
  double r_sph = 0.8;    // sphere radius (m)
  double r_circ = 0.15;  // surface circle radius (m)
  bool include_poles = true;
  std::set<int> excluded_indices;
  vec3 center = {0, 0, 0};

  void validate() const {
    if (!(r_circ > 0.0) || !(r_circ <= r_sph))
      throw error(errc::invalid_config, "require 0 < r_circ <= r_sph");
  }
};

// Number of latitude floors: floor(pi / (2 asin(r_circ / r_sph))).
inline int latitude_floor_count(double r_sph, double r_circ) {
  if (!(r_circ > 0.0) || !(r_circ <= r_sph))
    throw error(errc::invalid_config, "require 0 < r_circ <= r_sph");
  return int(std::floor(pi / (2.0 * std::asin(r_circ / r_sph))));
}

// Circles that fit on the floor at polar angle theta:
// floor(2 pi r_sph sin(theta) / (2 r_circ)). May be zero near the poles.
inline int circles_per_floor(double r_sph, double r_circ, double theta) {
  return int(std::floor(2.0 * pi * r_sph * std::sin(theta) / (2.0 * r_circ)));
}

// Euler angles (roll, pitch, yaw) in degrees [0, 360) for a direction given
// in Cartesian coordinates. Convention: roll = atan2(y, x),
// pitch = atan2(-z, hypot(x, y)), yaw = -atan2(sin(roll) z,
// cos(roll) x - sin(roll) y). atan2(0, 0) is taken as 0, which makes the
// pole directions well-defined.
inline vec3 euler_from_cartesian(const vec3& position) {
  if (position == vec3{0, 0, 0})
    throw error(errc::invalid_config, "euler_from_cartesian: zero vector");
  double roll = std::atan2(position.y, position.x);
  double pitch = std::atan2(-position.z,
                            std::sqrt(position.x * position.x +
                                      position.y * position.y));
  double yaw = -std::atan2(std::sin(roll) * position.z,
                           std::cos(roll) * position.x -
                               std::sin(roll) * position.y);
  return {radians_to_degrees_mod360(roll), radians_to_degrees_mod360(pitch),
          radians_to_degrees_mod360(yaw)};
}

struct viewpoint {
  int index = 0;       // position in the canonical enumeration, pre-exclusion
  double theta = 0.0;  // polar angle, [0, pi]
  double phi = 0.0;    // azimuth, [0, 2pi)
  vec3 position;       // center + r_sph * direction(theta, phi)
  vec3 euler_deg;      // (roll, pitch, yaw), degrees [0, 360)
};

inline vec3 spherical_to_cartesian(double r, double theta, double phi) {
  return {r * std::sin(theta) * std::cos(phi),
          r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
}

// Enumerates the viewpoint set: floors at theta_i = (i + 1/2) pi / N for
// i = 0..N-1 (so no floor degenerates at the poles), evenly spaced azimuths
// per floor, poles appended last (north, then south) when enabled. Indices
// follow that order; excluded indices are dropped but numbering is kept.
inline std::vector<viewpoint> generate_viewpoints(const sphere_config& cfg) {
  cfg.validate();
  std::vector<viewpoint> views;
  int floors = latitude_floor_count(cfg.r_sph, cfg.r_circ);
  int index = 0;
  for (int i = 0; i < floors; i++) {
    double theta = (i + 0.5) * pi / floors;
    int circles = circles_per_floor(cfg.r_sph, cfg.r_circ, theta);
    for (int j = 0; j < circles; j++) {
      double phi = j * 2.0 * pi / circles;
      vec3 offset = spherical_to_cartesian(cfg.r_sph, theta, phi);
      views.push_back(
          {index++, theta, phi, cfg.center + offset, euler_from_cartesian(offset)});
    }
  }
  if (cfg.include_poles) {
    vec3 north = {0.0, 0.0, cfg.r_sph};
    vec3 south = {0.0, 0.0, -cfg.r_sph};
    views.push_back(
        {index++, 0.0, 0.0, cfg.center + north, euler_from_cartesian(north)});
    views.push_back(
        {index++, pi, 0.0, cfg.center + south, euler_from_cartesian(south)});
  }
  for (int excluded : cfg.excluded_indices) {
    if (excluded < 0 || excluded >= index)
      throw error(errc::index_out_of_range,
                  "excluded viewpoint index " + std::to_string(excluded) +
                      " outside generated range 0.." + std::to_string(index - 1));
  }
  if (!cfg.excluded_indices.empty()) {
    std::vector<viewpoint> kept;
    kept.reserve(views.size());
    for (viewpoint& v : views)
      if (!cfg.excluded_indices.count(v.index)) kept.push_back(v);
    views = std::move(kept);
  }
  return views;
}

}  // namespace graspgen

#endif
