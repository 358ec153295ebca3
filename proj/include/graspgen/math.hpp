// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Small double-precision vector/matrix types used throughout the library.
// All geometry is metric (meters) and right-handed.

#ifndef GRASPGEN_MATH_HPP
#define GRASPGEN_MATH_HPP

#include <array>
#include <cmath>
#include <limits>

namespace graspgen {

inline constexpr double pi = 3.14159265358979323846;

struct vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](int i) { return (&x)[i]; }
  double operator[](int i) const { return (&x)[i]; }
};

inline vec3 operator+(const vec3& a, const vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline vec3 operator-(const vec3& a, const vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline vec3 operator-(const vec3& a) { return {-a.x, -a.y, -a.z}; }
inline vec3 operator*(const vec3& a, double s) {
  return {a.x * s, a.y * s, a.z * s};
}
inline vec3 operator*(double s, const vec3& a) { return a * s; }
inline vec3 operator*(const vec3& a, const vec3& b) {
  return {a.x * b.x, a.y * b.y, a.z * b.z};
}
inline vec3 operator/(const vec3& a, double s) {
  return {a.x / s, a.y / s, a.z / s};
}
inline vec3& operator+=(vec3& a, const vec3& b) { return a = a + b; }
inline vec3& operator-=(vec3& a, const vec3& b) { return a = a - b; }
inline vec3& operator*=(vec3& a, double s) { return a = a * s; }
inline bool operator==(const vec3& a, const vec3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

inline double dot(const vec3& a, const vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline vec3 cross(const vec3& a, const vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double length_squared(const vec3& a) { return dot(a, a); }
inline double length(const vec3& a) { return std::sqrt(dot(a, a)); }
inline vec3 normalize(const vec3& a) { return a / length(a); }
inline double distance(const vec3& a, const vec3& b) { return length(a - b); }
inline vec3 min(const vec3& a, const vec3& b) {
  return {std::fmin(a.x, b.x), std::fmin(a.y, b.y), std::fmin(a.z, b.z)};
}
inline vec3 max(const vec3& a, const vec3& b) {
  return {std::fmax(a.x, b.x), std::fmax(a.y, b.y), std::fmax(a.z, b.z)};
}
inline bool is_finite(const vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Row-major 3x3 matrix.
struct mat3 {
  std::array<double, 9> m = {1, 0, 0, 0, 1, 0, 0, 0, 1};

  double& operator()(int r, int c) { return m[3 * r + c]; }
  double operator()(int r, int c) const { return m[3 * r + c]; }

  static mat3 identity() { return {}; }
  static mat3 from_rows(const vec3& r0, const vec3& r1, const vec3& r2) {
    return {{r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z}};
  }
};

inline vec3 operator*(const mat3& a, const vec3& v) {
  return {a.m[0] * v.x + a.m[1] * v.y + a.m[2] * v.z,
          a.m[3] * v.x + a.m[4] * v.y + a.m[5] * v.z,
          a.m[6] * v.x + a.m[7] * v.y + a.m[8] * v.z};
}
inline mat3 operator*(const mat3& a, const mat3& b) {
  mat3 r{};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) {
      double s = 0.0;
      for (int k = 0; k < 3; k++) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}
inline mat3 transpose(const mat3& a) {
  return {{a.m[0], a.m[3], a.m[6], a.m[1], a.m[4], a.m[7], a.m[2], a.m[5],
           a.m[8]}};
}

inline mat3 rotation_x(double angle_rad) {
  double c = std::cos(angle_rad), s = std::sin(angle_rad);
  return {{1, 0, 0, 0, c, -s, 0, s, c}};
}
inline mat3 rotation_y(double angle_rad) {
  double c = std::cos(angle_rad), s = std::sin(angle_rad);
  return {{c, 0, s, 0, 1, 0, -s, 0, c}};
}
inline mat3 rotation_z(double angle_rad) {
  double c = std::cos(angle_rad), s = std::sin(angle_rad);
  return {{c, -s, 0, s, c, 0, 0, 0, 1}};
}

// Rodrigues rotation from an axis-angle vector (angle = |v| radians).
inline mat3 rotation_axis_angle(const vec3& v) {
  double angle = length(v);
  if (angle < 1e-12) return mat3::identity();
  vec3 a = v / angle;
  double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  return {{c + a.x * a.x * t, a.x * a.y * t - a.z * s, a.x * a.z * t + a.y * s,
           a.y * a.x * t + a.z * s, c + a.y * a.y * t,
           a.y * a.z * t - a.x * s, a.z * a.x * t - a.y * s,
           a.z * a.y * t + a.x * s, c + a.z * a.z * t}};
}

// Rigid transform p -> rotation * p + translation.
struct rigid_transform {
  mat3 rotation = mat3::identity();
  vec3 translation = {0, 0, 0};

  vec3 operator()(const vec3& p) const { return rotation * p + translation; }

  static rigid_transform identity() { return {}; }
};

inline rigid_transform operator*(const rigid_transform& a,
                                 const rigid_transform& b) {
  return {a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}
inline rigid_transform inverse(const rigid_transform& t) {
  mat3 rt = transpose(t.rotation);
  return {rt, -(rt * t.translation)};
}

// Extrinsic XYZ Euler rotation: Rz(yaw) * Ry(pitch) * Rx(roll), degrees.
inline mat3 rotation_euler_xyz_deg(const vec3& euler_deg) {
  double to_rad = pi / 180.0;
  return rotation_z(euler_deg.z * to_rad) * rotation_y(euler_deg.y * to_rad) *
         rotation_x(euler_deg.x * to_rad);
}

inline double radians_to_degrees_mod360(double angle_rad) {
  double deg = std::fmod(angle_rad * 180.0 / pi, 360.0);
  if (deg < 0.0) deg += 360.0;
  // fmod can return exactly 360 after the adjustment when angle is a tiny
  // negative; fold it back. Also flushes -0 to +0.
  if (deg >= 360.0 || deg == 0.0) deg = 0.0;
  return deg;
}

struct aabb {
  vec3 lo = {std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity()};
  vec3 hi = {-std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity()};

  void expand(const vec3& p) {
    lo = min(lo, p);
    hi = max(hi, p);
  }
  void expand(const aabb& b) {
    lo = min(lo, b.lo);
    hi = max(hi, b.hi);
  }
  vec3 center() const { return (lo + hi) * 0.5; }
  vec3 extent() const { return hi - lo; }
  bool valid() const { return lo.x <= hi.x && lo.y <= hi.y && lo.z <= hi.z; }
};

}  // namespace graspgen

#endif
