// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Skinned hand+forearm rig: skeleton, per-vertex skin weights, the surface
// mesh and the 21-keypoint map (wrist, then MCP/PIP/DIP/TIP for thumb,
// index, middle, ring, pinky). Posing is standard linear blend skinning.

#ifndef GRASPGEN_RIG_HPP
#define GRASPGEN_RIG_HPP

#include <array>
#include <string>
#include <vector>

#include "graspgen/grasp.hpp"
#include "graspgen/json_io.hpp"
#include "graspgen/mesh.hpp"

namespace graspgen {

inline constexpr const char* rig_format = "graspgen.rig/1";
inline constexpr int keypoint_count = 21;

struct rig_joint {
  std::string name;
  int parent = -1;  // -1 = root
  rigid_transform rest_local;
};

struct skin_weight {
  int joint = 0;
  double weight = 0.0;
};

struct hand_rig {
  std::vector<rig_joint> joints;
  std::vector<std::vector<skin_weight>> skin_weights;  // one list per vertex
  tri_mesh mesh;
  std::array<int, keypoint_count> keypoint_map = {};
  std::vector<int> arm_triangles;  // forearm part of the mesh, may be empty

  void validate() const {
    if (joints.empty()) throw error(errc::invalid_rig, "rig has no joints");
    if (joints[0].parent != -1)
      throw error(errc::invalid_rig, "joint 0 must be the root");
    for (size_t j = 1; j < joints.size(); j++) {
      if (joints[j].parent < 0 || joints[j].parent >= int(j))
        throw error(errc::invalid_rig,
                    "joint " + std::to_string(j) +
                        ": parents must precede children");
    }
    mesh.validate();
    if (skin_weights.size() != mesh.vertices.size())
      throw error(errc::invalid_rig, "one skin weight list per vertex required");
    for (size_t v = 0; v < skin_weights.size(); v++) {
      double sum = 0.0;
      for (const skin_weight& w : skin_weights[v]) {
        if (w.joint < 0 || w.joint >= int(joints.size()))
          throw error(errc::invalid_rig, "skin weight references bad joint");
        if (w.weight < 0.0)
          throw error(errc::invalid_rig, "negative skin weight");
        sum += w.weight;
      }
      if (std::abs(sum - 1.0) > 1e-6)
        throw error(errc::invalid_rig, "skin weights of vertex " +
                                           std::to_string(v) +
                                           " sum to " + std::to_string(sum));
    }
    for (int k : keypoint_map) {
      if (k < 0 || k >= int(joints.size()))
        throw error(errc::invalid_rig, "keypoint map references bad joint");
    }
    for (int t : arm_triangles) {
      if (t < 0 || t >= int(mesh.triangles.size()))
        throw error(errc::invalid_rig, "arm triangle index out of range");
    }
  }

  // Global rest transform of a joint (root chain composed).
  std::vector<rigid_transform> rest_globals() const {
    std::vector<rigid_transform> globals(joints.size());
    for (size_t j = 0; j < joints.size(); j++) {
      globals[j] = joints[j].parent < 0
                       ? joints[j].rest_local
                       : globals[size_t(joints[j].parent)] * joints[j].rest_local;
    }
    return globals;
  }
};

struct skinned_hand {
  tri_mesh mesh;  // posed copy of the rig mesh
  std::array<vec3, keypoint_count> joints_3d;
};

// Linear blend skinning. Each pose rotation acts in its joint's local frame
// about the joint origin; hand_translation shifts the whole result.
inline skinned_hand skin_hand(const hand_rig& rig, const grasp_pose& pose) {
  pose.validate(rig.joints.size());

  std::vector<rigid_transform> posed(rig.joints.size());
  for (size_t j = 0; j < rig.joints.size(); j++) {
    rigid_transform local =
        rig.joints[j].rest_local *
        rigid_transform{rotation_axis_angle(pose.joint_rotations[j]), {0, 0, 0}};
    posed[j] = rig.joints[j].parent < 0
                   ? local
                   : posed[size_t(rig.joints[j].parent)] * local;
  }

  std::vector<rigid_transform> rest = rig.rest_globals();
  std::vector<rigid_transform> skin(rig.joints.size());
  for (size_t j = 0; j < rig.joints.size(); j++)
    skin[j] = posed[j] * inverse(rest[j]);

  skinned_hand out;
  out.mesh = rig.mesh;
  for (size_t v = 0; v < rig.mesh.vertices.size(); v++) {
    vec3 blended = {0, 0, 0};
    for (const skin_weight& w : rig.skin_weights[v])
      blended += w.weight * skin[size_t(w.joint)](rig.mesh.vertices[v]);
    out.mesh.vertices[v] = blended + pose.hand_translation;
  }
  for (int k = 0; k < keypoint_count; k++) {
    out.joints_3d[size_t(k)] =
        posed[size_t(rig.keypoint_map[size_t(k)])].translation +
        pose.hand_translation;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rig file format
// ---------------------------------------------------------------------------

inline json rig_to_json(const hand_rig& rig) {
  json joints = json::array();
  for (const rig_joint& j : rig.joints) {
    joints.push_back({{"name", j.name},
                      {"parent", j.parent},
                      {"rest_rotation", mat3_to_json(j.rest_local.rotation)},
                      {"rest_translation", vec3_to_json(j.rest_local.translation)}});
  }
  json weights = json::array();
  for (const auto& per_vertex : rig.skin_weights) {
    json list = json::array();
    for (const skin_weight& w : per_vertex)
      list.push_back(json::array({w.joint, w.weight}));
    weights.push_back(list);
  }
  json vertices = json::array();
  for (const vec3& v : rig.mesh.vertices) vertices.push_back(vec3_to_json(v));
  json triangles = json::array();
  for (const auto& t : rig.mesh.triangles)
    triangles.push_back(json::array({t[0], t[1], t[2]}));
  return {{"format", rig_format},
          {"joints", joints},
          {"skin_weights", weights},
          {"mesh",
           {{"vertices", vertices},
            {"triangles", triangles},
            {"label", object_label_name(rig.mesh.label)}}},
          {"keypoint_map", rig.keypoint_map},
          {"arm_triangles", rig.arm_triangles}};
}

inline hand_rig rig_from_json(const json& j,
                              const std::filesystem::path& path) {
  check_format(j, rig_format, path);
  hand_rig rig;
  try {
    for (const json& joint : j.at("joints")) {
      rig.joints.push_back({joint.at("name").get<std::string>(),
                            joint.at("parent").get<int>(),
                            {mat3_from_json(joint.at("rest_rotation")),
                             vec3_from_json(joint.at("rest_translation"))}});
    }
    for (const json& per_vertex : j.at("skin_weights")) {
      std::vector<skin_weight> list;
      for (const json& w : per_vertex)
        list.push_back({w[0].get<int>(), w[1].get<double>()});
      rig.skin_weights.push_back(std::move(list));
    }
    const json& mesh = j.at("mesh");
    for (const json& v : mesh.at("vertices"))
      rig.mesh.vertices.push_back(vec3_from_json(v));
    for (const json& t : mesh.at("triangles"))
      rig.mesh.triangles.push_back(
          {t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    rig.mesh.label = object_label_from_name(mesh.at("label").get<std::string>());
    const json& keypoints = j.at("keypoint_map");
    if (keypoints.size() != keypoint_count)
      throw error(errc::invalid_rig, "keypoint_map must have 21 entries");
    for (int k = 0; k < keypoint_count; k++)
      rig.keypoint_map[size_t(k)] = keypoints[size_t(k)].get<int>();
    for (const json& t : j.at("arm_triangles"))
      rig.arm_triangles.push_back(t.get<int>());
  } catch (const json::exception& e) {
    throw error(errc::parse_failure,
                path.string() + ": " + std::string(e.what()));
  }
  rig.validate();
  return rig;
}

inline hand_rig load_rig(const std::filesystem::path& path) {
  return rig_from_json(load_json_file(path), path);
}

inline void save_rig(const hand_rig& rig, const std::filesystem::path& path) {
  save_json_file(rig_to_json(rig), path);
}

// ---------------------------------------------------------------------------
// Built-in test rig
// ---------------------------------------------------------------------------

namespace detail {

// Appends a low-poly capsule (hexagonal prism with pyramid caps) along the
// segment p0..p1, every vertex fully weighted to `joint`.
inline void append_capsule(hand_rig& rig, const vec3& p0, const vec3& p1,
                           double radius, int joint, bool is_arm) {
  int base = int(rig.mesh.vertices.size());
  int tri_base = int(rig.mesh.triangles.size());
  vec3 dir = normalize(p1 - p0);
  vec3 pick = std::abs(dir.x) < 0.9 ? vec3{1, 0, 0} : vec3{0, 1, 0};
  vec3 u = normalize(cross(dir, pick));
  vec3 w = cross(dir, u);

  for (int ring = 0; ring < 2; ring++) {
    vec3 center = ring == 0 ? p0 : p1;
    for (int k = 0; k < 6; k++) {
      double a = 2.0 * pi * k / 6.0;
      rig.mesh.vertices.push_back(center + radius * (std::cos(a) * u + std::sin(a) * w));
    }
  }
  rig.mesh.vertices.push_back(p0 - dir * radius);  // base apex
  rig.mesh.vertices.push_back(p1 + dir * radius);  // tip apex
  int apex0 = base + 12, apex1 = base + 13;

  for (int k = 0; k < 6; k++) {
    int k1 = (k + 1) % 6;
    int a = base + k, b = base + k1;          // ring at p0
    int c = base + 6 + k, d = base + 6 + k1;  // ring at p1
    rig.mesh.triangles.push_back({a, b, c});
    rig.mesh.triangles.push_back({b, d, c});
    rig.mesh.triangles.push_back({b, a, apex0});
    rig.mesh.triangles.push_back({c, d, apex1});
  }
  for (size_t v = rig.skin_weights.size(); v < rig.mesh.vertices.size(); v++)
    rig.skin_weights.push_back({{joint, 1.0}});
  if (is_arm) {
    for (int t = tri_base; t < int(rig.mesh.triangles.size()); t++)
      rig.arm_triangles.push_back(t);
  }
}

inline void append_weighted_box(hand_rig& rig, const vec3& lo, const vec3& hi,
                                int joint) {
  int base = int(rig.mesh.vertices.size());
  tri_mesh box = make_box_mesh(lo, hi);
  for (const vec3& v : box.vertices) rig.mesh.vertices.push_back(v);
  for (const auto& t : box.triangles)
    rig.mesh.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
  for (int v = 0; v < 8; v++) rig.skin_weights.push_back({{joint, 1.0}});
}

}  // namespace detail

// Procedural low-poly hand+forearm rig used as the bundled test asset.
// Rest pose: right hand flat in the x-y plane, fingers along +y, palm
// normal -z, wrist at the origin, forearm along -y. Deterministic.
inline hand_rig make_builtin_rig() {
  hand_rig rig;
  rig.mesh.label = object_label::hand;

  struct finger_spec {
    const char* name;
    vec3 mcp;         // MCP position relative to the wrist
    vec3 dir;         // pointing direction of the straight finger
    double segments[3];  // MCP->PIP, PIP->DIP, DIP->TIP lengths
    double radius;
  };
  const finger_spec fingers[5] = {
      {"thumb", {0.035, 0.025, 0.0}, normalize(vec3{1.0, 1.0, 0.0}),
       {0.036, 0.030, 0.024}, 0.011},
      {"index", {0.030, 0.095, 0.0}, {0.0, 1.0, 0.0}, {0.040, 0.025, 0.020}, 0.009},
      {"middle", {0.010, 0.100, 0.0}, {0.0, 1.0, 0.0}, {0.044, 0.028, 0.022}, 0.009},
      {"ring", {-0.012, 0.095, 0.0}, {0.0, 1.0, 0.0}, {0.040, 0.026, 0.020}, 0.0085},
      {"pinky", {-0.032, 0.085, 0.0}, {0.0, 1.0, 0.0}, {0.030, 0.020, 0.017}, 0.0075}};

  rig.joints.push_back({"wrist", -1, rigid_transform::identity()});
  rig.keypoint_map[0] = 0;

  int keypoint = 1;
  for (const finger_spec& f : fingers) {
    int mcp = int(rig.joints.size());
    rig.joints.push_back({std::string(f.name) + "_mcp", 0,
                          {mat3::identity(), f.mcp}});
    rig.joints.push_back({std::string(f.name) + "_pip", mcp,
                          {mat3::identity(), f.dir * f.segments[0]}});
    rig.joints.push_back({std::string(f.name) + "_dip", mcp + 1,
                          {mat3::identity(), f.dir * f.segments[1]}});
    rig.joints.push_back({std::string(f.name) + "_tip", mcp + 2,
                          {mat3::identity(), f.dir * f.segments[2]}});
    for (int k = 0; k < 4; k++) rig.keypoint_map[size_t(keypoint++)] = mcp + k;
  }

  int forearm = int(rig.joints.size());
  rig.joints.push_back({"forearm", 0, {mat3::identity(), {0.0, -0.02, 0.0}}});

  // Palm spans wrist to knuckles, weighted to the wrist.
  detail::append_weighted_box(rig, {-0.042, 0.0, -0.013}, {0.046, 0.092, 0.013}, 0);

  // Finger segments, each weighted to the joint that moves it.
  for (int f = 0; f < 5; f++) {
    int mcp = 1 + 4 * f;
    vec3 p = fingers[f].mcp;
    for (int s = 0; s < 3; s++) {
      vec3 q = p + fingers[f].dir * fingers[f].segments[s];
      detail::append_capsule(rig, p, q, fingers[f].radius, mcp + s, false);
      p = q;
    }
  }

  // Forearm capsule along -y, weighted to the forearm joint.
  detail::append_capsule(rig, {0.0, -0.02, 0.0}, {0.0, -0.24, 0.0}, 0.030,
                         forearm, true);

  rig.validate();
  return rig;
}

}  // namespace graspgen

#endif
