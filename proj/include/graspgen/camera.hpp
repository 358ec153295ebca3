// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Pinhole camera model. Camera space follows the computer-vision
// convention: +x right, +y down, +z forward (into the scene); pixel (u, v)
// has u growing rightward and v downward.

#ifndef GRASPGEN_CAMERA_HPP
#define GRASPGEN_CAMERA_HPP

#include <optional>

#include "graspgen/error.hpp"
#include "graspgen/math.hpp"
#include "graspgen/viewsphere.hpp"

namespace graspgen {

struct pinhole_intrinsics {
  double fx = 0.0, fy = 0.0;  // focal lengths (px)
  double cx = 0.0, cy = 0.0;  // principal point (px)
};

struct camera_view {
  viewpoint view;
  double distance = 0.0;  // camera-to-target distance actually used (m)
  pinhole_intrinsics intrinsics;
  rigid_transform extrinsics;  // world -> camera
  int width = 0, height = 0;
};

// Places the camera at center + distance * unit(vp.position - center),
// looking at center. Up is world +z unless the view direction is nearly
// parallel to it, then world +x.
inline camera_view camera_from_viewpoint(const viewpoint& vp, double distance,
                                         int width, int height,
                                         double vfov_deg, const vec3& center) {
  if (!(distance > 0.0))
    throw error(errc::invalid_config, "camera distance must be positive");
  if (!(vfov_deg > 0.0 && vfov_deg < 180.0))
    throw error(errc::invalid_config, "vertical fov must be in (0, 180)");
  vec3 radial = vp.position - center;
  if (length(radial) < 1e-12)
    throw error(errc::invalid_config, "degenerate view direction");

  vec3 position = center + distance * normalize(radial);
  vec3 forward = normalize(center - position);
  vec3 up = std::abs(dot(forward, vec3{0, 0, 1})) > 0.999 ? vec3{1, 0, 0}
                                                          : vec3{0, 0, 1};
  vec3 right = normalize(cross(forward, up));
  vec3 down = cross(forward, right);

  camera_view cam;
  cam.view = vp;
  cam.distance = distance;
  cam.width = width;
  cam.height = height;
  double fy = (height / 2.0) / std::tan(vfov_deg * pi / 180.0 / 2.0);
  cam.intrinsics = {fy, fy, width / 2.0, height / 2.0};
  mat3 rotation = mat3::from_rows(right, down, forward);
  cam.extrinsics = {rotation, -(rotation * position)};
  return cam;
}

struct projected_point {
  double u = 0.0, v = 0.0;  // pixels
  double depth = 0.0;       // camera-space z (m)
};

// Pinhole projection of a world point. Returns nothing for points at or
// behind the camera plane (z_c <= 0); never silently projects them.
inline std::optional<projected_point> project_point(const camera_view& camera,
                                                    const vec3& p_world) {
  if (!is_finite(p_world))
    throw error(errc::invalid_config, "project_point: non-finite point");
  vec3 pc = camera.extrinsics(p_world);
  if (pc.z <= 0.0) return std::nullopt;
  return projected_point{
      camera.intrinsics.fx * (pc.x / pc.z) + camera.intrinsics.cx,
      camera.intrinsics.fy * (pc.y / pc.z) + camera.intrinsics.cy, pc.z};
}

}  // namespace graspgen

#endif
