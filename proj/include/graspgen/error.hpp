// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRASPGEN_ERROR_HPP
#define GRASPGEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace graspgen {

// Error categories. Every failure carries one so callers (and the CLI exit
// code mapping) can tell them apart without string matching.
enum class errc {
  missing_file,
  io_failure,
  parse_failure,
  empty_mesh,
  index_out_of_range,
  invalid_mesh,
  invalid_rig,
  invalid_pose,
  invalid_config,
  empty_input,
  shape_mismatch,
  behind_camera,
  missing_frame,
  validation_failure,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::missing_file: return "missing_file";
    case errc::io_failure: return "io_failure";
    case errc::parse_failure: return "parse_failure";
    case errc::empty_mesh: return "empty_mesh";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::invalid_mesh: return "invalid_mesh";
    case errc::invalid_rig: return "invalid_rig";
    case errc::invalid_pose: return "invalid_pose";
    case errc::invalid_config: return "invalid_config";
    case errc::empty_input: return "empty_input";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::behind_camera: return "behind_camera";
    case errc::missing_frame: return "missing_frame";
    case errc::validation_failure: return "validation_failure";
  }
  return "unknown";
}

}  // namespace graspgen

#endif
