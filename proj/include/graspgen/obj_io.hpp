// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Wavefront OBJ reader/writer. Only vertex positions and triangular faces
// are consumed; texture/normal references in face corners are accepted and
// ignored. Faces with more than three corners are rejected, not fanned.

#ifndef GRASPGEN_OBJ_IO_HPP
#define GRASPGEN_OBJ_IO_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "graspgen/mesh.hpp"

namespace graspgen {

namespace detail {

// Resolves a 1-based (or negative, relative) OBJ index to 0-based.
inline int resolve_obj_index(long raw, size_t vertex_count, int line_no) {
  long resolved = raw > 0 ? raw - 1 : long(vertex_count) + raw;
  if (raw == 0 || resolved < 0 || resolved >= long(vertex_count))
    throw error(errc::index_out_of_range,
                "obj line " + std::to_string(line_no) +
                    ": face references vertex " + std::to_string(raw) +
                    " of " + std::to_string(vertex_count));
  return int(resolved);
}

inline long parse_face_corner(const std::string& token, int line_no) {
  // Corner syntax is v, v/vt, v//vn or v/vt/vn; only v matters here.
  size_t slash = token.find('/');
  std::string head = slash == std::string::npos ? token : token.substr(0, slash);
  try {
    size_t used = 0;
    long value = std::stol(head, &used);
    if (used != head.size()) throw std::invalid_argument(head);
    return value;
  } catch (const std::exception&) {
    throw error(errc::parse_failure, "obj line " + std::to_string(line_no) +
                                         ": bad face corner '" + token + "'");
  }
}

}  // namespace detail

inline tri_mesh load_mesh(const std::filesystem::path& path,
                          object_label label = object_label::other) {
  if (!std::filesystem::exists(path))
    throw error(errc::missing_file, "mesh file not found: " + path.string());
  std::ifstream in(path);
  if (!in)
    throw error(errc::io_failure, "cannot open mesh file: " + path.string());

  tri_mesh mesh;
  mesh.label = label;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      vec3 v;
      if (!(ls >> v.x >> v.y >> v.z))
        throw error(errc::parse_failure,
                    "obj line " + std::to_string(line_no) + ": bad vertex");
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<long> corners;
      std::string token;
      while (ls >> token)
        corners.push_back(detail::parse_face_corner(token, line_no));
      if (corners.size() != 3)
        throw error(errc::parse_failure,
                    "obj line " + std::to_string(line_no) + ": face has " +
                        std::to_string(corners.size()) +
                        " corners, only triangles are supported");
      mesh.triangles.push_back(
          {detail::resolve_obj_index(corners[0], mesh.vertices.size(), line_no),
           detail::resolve_obj_index(corners[1], mesh.vertices.size(), line_no),
           detail::resolve_obj_index(corners[2], mesh.vertices.size(), line_no)});
    }
    // vt, vn, o, g, s, usemtl, mtllib: ignored.
  }
  mesh.validate();
  return mesh;
}

inline void save_mesh(const tri_mesh& mesh,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw error(errc::io_failure, "cannot write mesh file: " + path.string());
  out.precision(17);
  for (const vec3& v : mesh.vertices)
    out << "v " << v.x << " " << v.y << " " << v.z << "\n";
  for (const auto& t : mesh.triangles)
    out << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
  if (!out)
    throw error(errc::io_failure, "write failed: " + path.string());
}

}  // namespace graspgen

#endif
