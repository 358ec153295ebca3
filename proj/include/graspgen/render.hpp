// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic CPU ray-casting renderer. One primary ray per pixel center,
// Lambertian shading with ambient, optional shadow rays. Every pass of a
// frame set is a pure function of (scene, camera, config, overlay), so
// output is identical regardless of scheduling.

#ifndef GRASPGEN_RENDER_HPP
#define GRASPGEN_RENDER_HPP

#include <variant>
#include <vector>

#include "graspgen/bvh.hpp"
#include "graspgen/camera.hpp"
#include "graspgen/image.hpp"
#include "graspgen/png_io.hpp"

namespace graspgen {

struct scene_object {
  tri_mesh mesh;
  rigid_transform transform;
  rgb base_color;
};

struct point_light {
  vec3 position;
  double intensity = 1.0;
  rgb color = {1, 1, 1};
};

// Background is either a solid color or an image stretched to the frame.
using background_spec = std::variant<rgb, image_rgb>;

struct render_scene {
  std::vector<scene_object> objects;
  std::vector<point_light> lights;
  double ambient = 0.1;
  background_spec background = rgb{0, 0, 0};

  void validate() const {
    if (objects.empty())
      throw error(errc::empty_input, "render scene has no objects");
    for (const scene_object& o : objects) o.mesh.validate();
    for (const point_light& l : lights)
      if (l.intensity < 0.0)
        throw error(errc::invalid_config, "light intensity must be >= 0");
    if (ambient < 0.0 || ambient > 1.0)
      throw error(errc::invalid_config, "ambient must be in [0, 1]");
  }
};

struct render_config {
  int width = 256;
  int height = 256;
  bool shadows = false;

  void validate() const {
    if (width <= 0 || height <= 0)
      throw error(errc::invalid_config, "image size must be positive");
  }
};

// World keypoints drawn into the ground-truth overlay pass.
struct ground_truth_overlay {
  std::vector<vec3> hand_keypoints;
  std::vector<vec3> object_corners;
};

// All per-frame output passes, identical dimensions.
struct frame_set {
  image_rgb rgb_pass;
  image_depth depth;
  image_depth depth_hand;
  image_depth depth_probe;
  image_rgb rgb_no_hand;
  image_rgb rgb_no_probe;
  image_labels segmentation;
  image_rgb rgb_gt_overlay;
};

inline bvh build_bvh(const render_scene& scene) {
  scene.validate();
  std::vector<bvh_primitive> primitives;
  for (int o = 0; o < int(scene.objects.size()); o++) {
    const scene_object& obj = scene.objects[size_t(o)];
    for (int t = 0; t < int(obj.mesh.triangles.size()); t++) {
      const auto& tri = obj.mesh.triangles[size_t(t)];
      primitives.push_back({obj.transform(obj.mesh.vertices[size_t(tri[0])]),
                            obj.transform(obj.mesh.vertices[size_t(tri[1])]),
                            obj.transform(obj.mesh.vertices[size_t(tri[2])]),
                            o, t, obj.mesh.label});
    }
  }
  return bvh(std::move(primitives));
}

// Primary ray through the center of pixel (x, y). The direction is scaled
// so the ray parameter equals camera-space depth.
inline ray primary_ray(const camera_view& camera, int x, int y) {
  vec3 dir_cam = {(x + 0.5 - camera.intrinsics.cx) / camera.intrinsics.fx,
                  (y + 0.5 - camera.intrinsics.cy) / camera.intrinsics.fy, 1.0};
  mat3 cam_to_world = transpose(camera.extrinsics.rotation);
  vec3 origin = -(cam_to_world * camera.extrinsics.translation);
  return {origin, cam_to_world * dir_cam};
}

// Nearest hit of the pixel's primary ray among mask-enabled objects.
// scene_hit.t is the camera-space depth.
inline std::optional<scene_hit> trace_primary(
    const bvh& tree, const camera_view& camera, int x, int y,
    uint64_t object_mask = all_objects_mask) {
  if (x < 0 || x >= camera.width || y < 0 || y >= camera.height)
    throw error(errc::index_out_of_range, "pixel outside image");
  return tree.trace(primary_ray(camera, x, y), object_mask);
}

namespace detail {

inline rgb sample_background(const background_spec& background, int x, int y,
                             int width, int height) {
  if (const rgb* color = std::get_if<rgb>(&background)) return *color;
  const image_rgb& img = std::get<image_rgb>(background);
  // nearest-neighbor stretch to the frame
  int sx = std::min(img.width - 1, int(double(x) * img.width / width));
  int sy = std::min(img.height - 1, int(double(y) * img.height / height));
  return img.at(sx, sy);
}

inline rgb shade_hit(const render_scene& scene, const bvh& tree,
                     const scene_hit& hit, const ray& r, bool shadows) {
  const scene_object& obj = scene.objects[size_t(hit.object)];
  vec3 n = hit.normal;
  if (dot(n, r.direction) > 0.0) n = -n;  // face the viewer
  rgb light_sumated = {0, 0, 0};
  for (const point_light& light : scene.lights) {
    vec3 to_light = light.position - hit.position;
    double dist = length(to_light);
    if (dist < 1e-12) continue;
    vec3 l = to_light / dist;
    double lambert = dot(n, l);
    if (lambert <= 0.0) continue;
    if (shadows) {
      // offset along the normal to avoid self-intersection
      ray shadow_ray{hit.position + n * 1e-9, l};
      auto blocker = tree.trace(shadow_ray);
      if (blocker && blocker->t < dist) continue;
    }
    light_sumated = light_sumated + light.color * (light.intensity * lambert);
  }
  rgb factor = clamp01(rgb{scene.ambient, scene.ambient, scene.ambient} +
                       light_sumated);
  return clamp01(obj.base_color * factor);
}

inline void draw_square(image_rgb& img, double u, double v, const rgb& color) {
  // 3x3 pixel square centered on the projected point
  int cx = int(std::floor(u));
  int cy = int(std::floor(v));
  for (int dy = -1; dy <= 1; dy++)
    for (int dx = -1; dx <= 1; dx++)
      if (img.contains(cx + dx, cy + dy)) img.at(cx + dx, cy + dy) = color;
}

}  // namespace detail

inline constexpr rgb overlay_hand_color = {0.0, 1.0, 0.0};
inline constexpr rgb overlay_corner_color = {1.0, 0.0, 0.0};

// Renders every pass for one camera view. Per pixel: the full-scene nearest
// hit drives rgb (composited over the background on miss), depth and
// segmentation; depth_hand / depth_probe see only that label; rgb_no_hand /
// rgb_no_probe see everything but that label; the overlay pass is rgb plus
// 3x3 squares at the projected ground-truth points.
inline frame_set render_frameset(const render_scene& scene,
                                 const camera_view& camera,
                                 const render_config& cfg,
                                 const ground_truth_overlay& gt = {}) {
  scene.validate();
  cfg.validate();
  if (camera.width != cfg.width || camera.height != cfg.height)
    throw error(errc::invalid_config, "camera and render size disagree");

  bvh tree = build_bvh(scene);
  uint64_t hand_only = label_mask({object_label::hand});
  uint64_t probe_only = label_mask({object_label::probe});
  uint64_t no_hand = label_mask_without({object_label::hand});
  uint64_t no_probe = label_mask_without({object_label::probe});
  // per-object masks resolve through labels
  auto object_mask_for = [&](uint64_t wanted_labels) {
    uint64_t mask = 0;
    for (int o = 0; o < int(scene.objects.size()); o++)
      if (wanted_labels & (uint64_t(1) << uint64_t(scene.objects[size_t(o)].mesh.label)))
        mask |= uint64_t(1) << uint64_t(o);
    return mask;
  };
  uint64_t mask_hand = object_mask_for(hand_only);
  uint64_t mask_probe = object_mask_for(probe_only);
  uint64_t mask_no_hand = object_mask_for(no_hand);
  uint64_t mask_no_probe = object_mask_for(no_probe);

  frame_set out;
  out.rgb_pass = image_rgb(cfg.width, cfg.height);
  out.depth = image_depth(cfg.width, cfg.height, 0.0);
  out.depth_hand = image_depth(cfg.width, cfg.height, 0.0);
  out.depth_probe = image_depth(cfg.width, cfg.height, 0.0);
  out.rgb_no_hand = image_rgb(cfg.width, cfg.height);
  out.rgb_no_probe = image_rgb(cfg.width, cfg.height);
  out.segmentation = image_labels(cfg.width, cfg.height, 0);
  out.rgb_gt_overlay = image_rgb(cfg.width, cfg.height);

  for (int y = 0; y < cfg.height; y++) {
    for (int x = 0; x < cfg.width; x++) {
      ray r = primary_ray(camera, x, y);
      rgb bg = detail::sample_background(scene.background, x, y, cfg.width,
                                         cfg.height);
      auto shade_or_bg = [&](const std::optional<scene_hit>& hit) {
        return hit ? detail::shade_hit(scene, tree, *hit, r, cfg.shadows) : bg;
      };

      auto hit = tree.trace(r);
      out.rgb_pass.at(x, y) = shade_or_bg(hit);
      if (hit) {
        out.depth.at(x, y) = hit->t;
        out.segmentation.at(x, y) =
            uint8_t(scene.objects[size_t(hit->object)].mesh.label);
      }
      if (auto h = tree.trace(r, mask_hand)) out.depth_hand.at(x, y) = h->t;
      if (auto h = tree.trace(r, mask_probe)) out.depth_probe.at(x, y) = h->t;
      out.rgb_no_hand.at(x, y) = shade_or_bg(tree.trace(r, mask_no_hand));
      out.rgb_no_probe.at(x, y) = shade_or_bg(tree.trace(r, mask_no_probe));
    }
  }

  out.rgb_gt_overlay = out.rgb_pass;
  for (const vec3& p : gt.hand_keypoints) {
    if (auto proj = project_point(camera, p))
      detail::draw_square(out.rgb_gt_overlay, proj->u, proj->v,
                          overlay_hand_color);
  }
  for (const vec3& p : gt.object_corners) {
    if (auto proj = project_point(camera, p))
      detail::draw_square(out.rgb_gt_overlay, proj->u, proj->v,
                          overlay_corner_color);
  }
  return out;
}

// Pass filenames inside a frame directory, fixed by the dataset format.
inline const std::vector<std::pair<const char*, const char*>>&
frame_pass_files() {
  static const std::vector<std::pair<const char*, const char*>> files = {
      {"rgb", "rgb.png"},
      {"depth", "depth.png"},
      {"depth_hand", "depth_hand.png"},
      {"depth_probe", "depth_probe.png"},
      {"rgb_no_hand", "rgb_no_hand.png"},
      {"rgb_no_probe", "rgb_no_probe.png"},
      {"segmentation", "segmentation.png"},
      {"rgb_gt_overlay", "rgb_gt_overlay.png"}};
  return files;
}

inline void save_frameset(const frame_set& frames,
                          const std::filesystem::path& dir) {
  save_png_rgb8(frames.rgb_pass, dir / "rgb.png");
  save_png_depth16(frames.depth, dir / "depth.png");
  save_png_depth16(frames.depth_hand, dir / "depth_hand.png");
  save_png_depth16(frames.depth_probe, dir / "depth_probe.png");
  save_png_rgb8(frames.rgb_no_hand, dir / "rgb_no_hand.png");
  save_png_rgb8(frames.rgb_no_probe, dir / "rgb_no_probe.png");
  save_png_labels8(frames.segmentation, dir / "segmentation.png");
  save_png_rgb8(frames.rgb_gt_overlay, dir / "rgb_gt_overlay.png");
}

}  // namespace graspgen

#endif
