// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRASPGEN_INTERSECT_HPP
#define GRASPGEN_INTERSECT_HPP

#include <optional>

#include "graspgen/math.hpp"

namespace graspgen {

struct ray {
  vec3 origin;
  vec3 direction;  // not required to be unit length
};

// Moller-Trumbore ray/triangle intersection. Returns the ray parameter t of
// the hit, or nothing. Hits with t <= t_min are rejected.
inline std::optional<double> intersect_triangle(const ray& r, const vec3& a,
                                                const vec3& b, const vec3& c,
                                                double t_min = 0.0) {
  vec3 edge1 = b - a;
  vec3 edge2 = c - a;
  vec3 pvec = cross(r.direction, edge2);
  double det = dot(edge1, pvec);
  if (std::abs(det) < 1e-14) return std::nullopt;  // parallel
  double inv_det = 1.0 / det;
  vec3 tvec = r.origin - a;
  double u = dot(tvec, pvec) * inv_det;
  if (u < 0.0 || u > 1.0) return std::nullopt;
  vec3 qvec = cross(tvec, edge1);
  double v = dot(r.direction, qvec) * inv_det;
  if (v < 0.0 || u + v > 1.0) return std::nullopt;
  double t = dot(edge2, qvec) * inv_det;
  if (t <= t_min) return std::nullopt;
  return t;
}

// Slab test against an axis-aligned box over the parameter range
// [t_min, t_max]. inv_direction = 1/direction componentwise (inf allowed).
inline bool intersect_aabb(const vec3& origin, const vec3& inv_direction,
                           const aabb& box, double t_min, double t_max) {
  for (int axis = 0; axis < 3; axis++) {
    double t0 = (box.lo[axis] - origin[axis]) * inv_direction[axis];
    double t1 = (box.hi[axis] - origin[axis]) * inv_direction[axis];
    if (t0 > t1) std::swap(t0, t1);
    t_min = t0 > t_min ? t0 : t_min;
    t_max = t1 < t_max ? t1 : t_max;
    if (t_max < t_min) return false;
  }
  return true;
}

}  // namespace graspgen

#endif
