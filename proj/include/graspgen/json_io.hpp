// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the structured-text (JSON) file formats. Every file
// carries a "format" string of the form "graspgen.<kind>/<version>" which is
// checked on load.

#ifndef GRASPGEN_JSON_IO_HPP
#define GRASPGEN_JSON_IO_HPP

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "graspgen/error.hpp"
#include "graspgen/math.hpp"

namespace graspgen {

using json = nlohmann::json;

inline json vec3_to_json(const vec3& v) { return json::array({v.x, v.y, v.z}); }

inline vec3 vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw error(errc::parse_failure, "expected a 3-element array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline json mat3_to_json(const mat3& m) {
  json j = json::array();
  for (double v : m.m) j.push_back(v);
  return j;
}

inline mat3 mat3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 9)
    throw error(errc::parse_failure, "expected a 9-element array");
  mat3 m{};
  for (int i = 0; i < 9; i++) m.m[size_t(i)] = j[size_t(i)].get<double>();
  return m;
}

inline json load_json_file(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    throw error(errc::missing_file, "file not found: " + path.string());
  std::ifstream in(path);
  if (!in)
    throw error(errc::io_failure, "cannot open: " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::parse_failure,
                path.string() + ": " + std::string(e.what()));
  }
}

// Serialization is part of the on-disk format contract: 2-space indent,
// sorted keys (nlohmann objects sort by construction), '\n' terminated.
inline void save_json_file(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw error(errc::io_failure, "cannot write: " + path.string());
  out << j.dump(2) << "\n";
  if (!out)
    throw error(errc::io_failure, "write failed: " + path.string());
}

inline void check_format(const json& j, const std::string& expected,
                         const std::filesystem::path& path) {
  if (!j.contains("format") || !j["format"].is_string())
    throw error(errc::parse_failure,
                path.string() + ": missing format field, expected " + expected);
  std::string format = j["format"].get<std::string>();
  if (format != expected)
    throw error(errc::parse_failure, path.string() + ": format is '" + format +
                                         "', expected '" + expected + "'");
}

}  // namespace graspgen

#endif
