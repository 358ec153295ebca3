// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRASPGEN_PROBE_HPP
#define GRASPGEN_PROBE_HPP

#include <array>
#include <optional>

#include "graspgen/bps.hpp"
#include "graspgen/grasp.hpp"
#include "graspgen/intersect.hpp"
#include "graspgen/mesh.hpp"
#include "graspgen/rig.hpp"

namespace graspgen {

// Translation offset between the grasp-input probe frame and the render
// scene frame, measured once from the source geometry (meters).
inline constexpr double default_probe_z_offset = 0.07189549170510294;

// The ultrasound probe: mesh, z-offset correction magnitude, and the
// object-frame box whose corners serve as the object keypoints.
struct probe_model {
  tri_mesh mesh;
  double z_offset = default_probe_z_offset;
  aabb corner_source;

  void validate() const {
    mesh.validate();
    if (!std::isfinite(z_offset))
      throw error(errc::invalid_mesh, "probe z_offset must be finite");
    if (!corner_source.valid())
      throw error(errc::invalid_mesh, "probe corner box has min > max");
  }
};

inline probe_model make_probe_model(tri_mesh mesh,
                                    double z_offset = default_probe_z_offset) {
  probe_model probe;
  probe.corner_source = mesh.bounds();
  probe.mesh = std::move(mesh);
  probe.z_offset = z_offset;
  probe.validate();
  return probe;
}

// The 8 corners of the probe's object-frame box under `probe_pose`.
// Corner order is fixed: index bit 0 selects x (0 = min, 1 = max), bit 1
// selects y, bit 2 selects z.
inline std::array<vec3, 8> object_corner_keypoints(
    const probe_model& probe, const rigid_transform& probe_pose) {
  std::array<vec3, 8> corners;
  const aabb& box = probe.corner_source;
  for (int i = 0; i < 8; i++) {
    vec3 corner = {(i & 1) ? box.hi.x : box.lo.x, (i & 2) ? box.hi.y : box.lo.y,
                   (i & 4) ? box.hi.z : box.lo.z};
    corners[size_t(i)] = probe_pose(corner);
  }
  return corners;
}

// Ray-parity containment test. Only meaningful on watertight meshes; the
// caller is expected to check is_watertight first.
inline bool point_inside_mesh(const vec3& point, const tri_mesh& mesh) {
  // Fixed irrational-ish direction to dodge edge-aligned rays.
  ray r{point, normalize(vec3{0.5378163, 0.8132419, 0.2243367})};
  int crossings = 0;
  for (const auto& t : mesh.triangles) {
    if (intersect_triangle(r, mesh.vertices[size_t(t[0])],
                           mesh.vertices[size_t(t[1])],
                           mesh.vertices[size_t(t[2])], 1e-12))
      crossings++;
  }
  return crossings % 2 == 1;
}

// Geometric grasp quality report: vertex contacts against the probe, the
// closest approach, and (when the probe is watertight) whether any hand
// vertex sits strictly inside it.
struct grasp_report {
  int contact_count = 0;
  double min_distance_m = 0.0;
  std::optional<bool> penetration;  // nullopt: probe not watertight
};

inline grasp_report validate_grasp(const hand_rig& rig, const grasp_pose& pose,
                                   const probe_model& probe,
                                   double contact_threshold) {
  if (!(contact_threshold > 0.0))
    throw error(errc::invalid_config, "contact threshold must be positive");

  skinned_hand posed = skin_hand(rig, pose);
  rigid_transform probe_pose{rotation_euler_xyz_deg(pose.probe_euler_deg),
                             apply_z_offset({0, 0, 0}, probe.z_offset)};
  tri_mesh probe_world = transform_mesh(probe.mesh, probe_pose);

  std::vector<double> distances =
      hand_object_distances(posed.mesh.vertices, probe_world.vertices);

  grasp_report report;
  report.min_distance_m = std::numeric_limits<double>::infinity();
  for (double d : distances) {
    if (d < contact_threshold) report.contact_count++;
    if (d < report.min_distance_m) report.min_distance_m = d;
  }
  if (is_watertight(probe_world)) {
    bool inside = false;
    for (const vec3& v : posed.mesh.vertices) {
      if (point_inside_mesh(v, probe_world)) {
        inside = true;
        break;
      }
    }
    report.penetration = inside;
  }
  return report;
}

// Procedural probe stand-in: a watertight loft of rectangular cross
// sections, narrow handle widening into a convex-array style head. The
// probe's long axis is +z with the head at the top.
inline tri_mesh make_builtin_probe_mesh() {
  struct section {
    double z, half_x, half_y;
  };
  // handle bottom -> neck -> head
  const section sections[] = {{0.000, 0.016, 0.013}, {0.060, 0.018, 0.014},
                              {0.095, 0.022, 0.016}, {0.115, 0.034, 0.020},
                              {0.140, 0.038, 0.022}};
  const int n = int(std::size(sections));

  tri_mesh mesh;
  mesh.label = object_label::probe;
  for (const section& s : sections) {
    mesh.vertices.push_back({-s.half_x, -s.half_y, s.z});
    mesh.vertices.push_back({s.half_x, -s.half_y, s.z});
    mesh.vertices.push_back({s.half_x, s.half_y, s.z});
    mesh.vertices.push_back({-s.half_x, s.half_y, s.z});
  }
  // side walls between consecutive rings
  for (int i = 0; i + 1 < n; i++) {
    int a = 4 * i, b = 4 * (i + 1);
    for (int k = 0; k < 4; k++) {
      int k1 = (k + 1) % 4;
      mesh.triangles.push_back({a + k, a + k1, b + k});
      mesh.triangles.push_back({a + k1, b + k1, b + k});
    }
  }
  // caps
  mesh.triangles.push_back({0, 2, 1});
  mesh.triangles.push_back({0, 3, 2});
  int top = 4 * (n - 1);
  mesh.triangles.push_back({top, top + 1, top + 2});
  mesh.triangles.push_back({top, top + 2, top + 3});
  mesh.validate();
  return mesh;
}

inline probe_model make_builtin_probe() {
  return make_probe_model(make_builtin_probe_mesh());
}

// Basis sized to the probe: uniform in a ball of 1.1x the bounding-sphere
// radius around the bounds center. Default count 1024.
inline basis_point_set make_probe_basis(const probe_model& probe,
                                        uint64_t seed, int count = 1024) {
  aabb box = probe.mesh.bounds();
  double bounding_radius = 0.0;
  vec3 center = box.center();
  for (const vec3& v : probe.mesh.vertices)
    bounding_radius = std::max(bounding_radius, distance(v, center));
  return make_basis_point_set(seed, count, 1.1 * bounding_radius, center);
}

}  // namespace graspgen

#endif
