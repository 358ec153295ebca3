// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRASPGEN_MESH_HPP
#define GRASPGEN_MESH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graspgen/error.hpp"
#include "graspgen/math.hpp"

namespace graspgen {

// Object category of a mesh. Values double as segmentation labels, with 0
// reserved for background pixels.
enum class object_label : uint8_t { other = 0, hand = 1, arm = 2, probe = 3 };

inline const char* object_label_name(object_label label) {
  switch (label) {
    case object_label::hand: return "hand";
    case object_label::arm: return "arm";
    case object_label::probe: return "probe";
    case object_label::other: return "other";
  }
  return "other";
}

inline object_label object_label_from_name(const std::string& name) {
  if (name == "hand") return object_label::hand;
  if (name == "arm") return object_label::arm;
  if (name == "probe") return object_label::probe;
  if (name == "other") return object_label::other;
  throw error(errc::parse_failure, "unknown object label: " + name);
}

// Indexed triangle mesh. Invariants are checked by validate(): all indices
// in range, no degenerate index triples, finite vertex coordinates.
// Violations are rejected, never repaired.
struct tri_mesh {
  std::vector<vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  object_label label = object_label::other;

  void validate() const {
    if (vertices.empty() || triangles.empty())
      throw error(errc::empty_mesh, "mesh has no vertices or no triangles");
    for (const vec3& v : vertices) {
      if (!is_finite(v))
        throw error(errc::invalid_mesh, "non-finite vertex coordinate");
    }
    int n = int(vertices.size());
    for (const auto& t : triangles) {
      for (int i : t) {
        if (i < 0 || i >= n)
          throw error(errc::index_out_of_range,
                      "triangle references vertex " + std::to_string(i) +
                          " of " + std::to_string(n));
      }
      if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        throw error(errc::invalid_mesh, "degenerate triangle index triple");
    }
  }

  aabb bounds() const {
    aabb box;
    for (const vec3& v : vertices) box.expand(v);
    return box;
  }
};

inline tri_mesh transform_mesh(const tri_mesh& mesh,
                               const rigid_transform& pose) {
  tri_mesh out = mesh;
  for (vec3& v : out.vertices) v = pose(v);
  return out;
}

// A mesh is watertight when every undirected edge is shared by exactly two
// triangles with opposite winding.
inline bool is_watertight(const tri_mesh& mesh) {
  std::map<std::pair<int, int>, int> directed;
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; k++) {
      int a = t[k], b = t[(k + 1) % 3];
      if (++directed[{a, b}] > 1) return false;  // duplicate directed edge
    }
  }
  for (const auto& [edge, count] : directed) {
    auto opposite = directed.find({edge.second, edge.first});
    if (opposite == directed.end() || opposite->second != count) return false;
  }
  return true;
}

// Axis-aligned unit-size primitives used by tests and bundled assets.
inline tri_mesh make_box_mesh(const vec3& lo, const vec3& hi,
                              object_label label = object_label::other) {
  tri_mesh mesh;
  mesh.label = label;
  for (int i = 0; i < 8; i++) {
    mesh.vertices.push_back({(i & 1) ? hi.x : lo.x, (i & 2) ? hi.y : lo.y,
                             (i & 4) ? hi.z : lo.z});
  }
  // 12 triangles, outward winding.
  mesh.triangles = {{0, 2, 1}, {1, 2, 3}, {4, 5, 6}, {5, 7, 6},
                    {0, 1, 4}, {1, 5, 4}, {2, 6, 3}, {3, 6, 7},
                    {0, 4, 2}, {2, 4, 6}, {1, 3, 5}, {3, 7, 5}};
  return mesh;
}

inline tri_mesh make_unit_cube_mesh(object_label label = object_label::other) {
  return make_box_mesh({-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}, label);
}

}  // namespace graspgen

#endif
