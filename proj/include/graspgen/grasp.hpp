// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRASPGEN_GRASP_HPP
#define GRASPGEN_GRASP_HPP

#include <string>
#include <vector>

#include "graspgen/json_io.hpp"
#include "graspgen/math.hpp"

namespace graspgen {

inline constexpr const char* grasp_format = "graspgen.grasp/1";

// One hand-probe grasp: global hand translation, per-joint rotations
// (axis-angle, radians, one entry per rig joint, wrist first) and the probe
// orientation as Euler angles in degrees.
struct grasp_pose {
  std::string grasp_id;
  vec3 hand_translation = {0, 0, 0};
  std::vector<vec3> joint_rotations;
  vec3 probe_euler_deg = {0, 0, 0};

  void validate(size_t rig_joint_count) const {
    if (joint_rotations.size() != rig_joint_count)
      throw error(errc::invalid_pose,
                  "grasp '" + grasp_id + "' has " +
                      std::to_string(joint_rotations.size()) +
                      " joint rotations, rig has " +
                      std::to_string(rig_joint_count) + " joints");
    if (!is_finite(hand_translation))
      throw error(errc::invalid_pose, "non-finite hand translation");
    for (const vec3& r : joint_rotations)
      if (!is_finite(r))
        throw error(errc::invalid_pose, "non-finite joint rotation");
    for (int i = 0; i < 3; i++)
      if (!(probe_euler_deg[i] >= 0.0 && probe_euler_deg[i] < 360.0))
        throw error(errc::invalid_pose,
                    "probe Euler angles must be in [0, 360)");
  }
};

// Shifts a probe translation by (0, 0, -dz): the grasp-input convention
// places the probe displaced along +z by dz, the render scene does not.
// Applying again with -dz undoes the shift.
inline vec3 apply_z_offset(const vec3& probe_translation, double dz) {
  return probe_translation + vec3{0.0, 0.0, -dz};
}

inline json grasp_to_json(const grasp_pose& pose) {
  json rotations = json::array();
  for (const vec3& r : pose.joint_rotations) rotations.push_back(vec3_to_json(r));
  return {{"format", grasp_format},
          {"grasp_id", pose.grasp_id},
          {"hand_translation", vec3_to_json(pose.hand_translation)},
          {"joint_rotations", rotations},
          {"probe_euler_deg", vec3_to_json(pose.probe_euler_deg)}};
}

inline grasp_pose grasp_from_json(const json& j,
                                  const std::filesystem::path& path) {
  check_format(j, grasp_format, path);
  grasp_pose pose;
  try {
    pose.grasp_id = j.at("grasp_id").get<std::string>();
    pose.hand_translation = vec3_from_json(j.at("hand_translation"));
    for (const json& r : j.at("joint_rotations"))
      pose.joint_rotations.push_back(vec3_from_json(r));
    pose.probe_euler_deg = vec3_from_json(j.at("probe_euler_deg"));
  } catch (const json::exception& e) {
    throw error(errc::parse_failure,
                path.string() + ": " + std::string(e.what()));
  }
  return pose;
}

inline grasp_pose load_grasp(const std::filesystem::path& path) {
  return grasp_from_json(load_json_file(path), path);
}

inline void save_grasp(const grasp_pose& pose,
                       const std::filesystem::path& path) {
  save_json_file(grasp_to_json(pose), path);
}

}  // namespace graspgen

#endif
