// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// Axis-aligned bounding volume hierarchy over world-space scene triangles.
// Construction is deterministic (median split on the widest centroid axis,
// ties broken by primitive id), and traversal returns exactly the hit a
// brute-force scan over all triangles would: the smallest t, ties broken by
// lower (object id, triangle id).

#ifndef GRASPGEN_BVH_HPP
#define GRASPGEN_BVH_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "graspgen/intersect.hpp"
#include "graspgen/mesh.hpp"

namespace graspgen {

struct bvh_primitive {
  vec3 a, b, c;      // world-space triangle
  int object = 0;    // scene object index
  int triangle = 0;  // triangle index within the object
  object_label label = object_label::other;
};

struct bvh_node {
  aabb box;
  int left = -1, right = -1;  // interior children, or -1
  int first = 0, count = 0;   // leaf primitive range, count 0 for interior
};

struct scene_hit {
  int object = 0;
  int triangle = 0;
  double t = 0.0;  // ray parameter
  vec3 position;
  vec3 normal;  // unit geometric normal, not yet facing-corrected
};

// No label filter: all objects visible.
inline constexpr uint64_t all_objects_mask = ~uint64_t(0);

inline uint64_t label_mask(std::initializer_list<object_label> labels) {
  uint64_t mask = 0;
  for (object_label l : labels) mask |= uint64_t(1) << uint64_t(l);
  return mask;
}
inline uint64_t label_mask_without(std::initializer_list<object_label> labels) {
  return all_objects_mask & ~label_mask(labels);
}

class bvh {
 public:
  static constexpr int leaf_size = 4;

  explicit bvh(std::vector<bvh_primitive> primitives)
      : primitives_(std::move(primitives)) {
    if (primitives_.empty())
      throw error(errc::empty_mesh, "cannot build a BVH over an empty scene");
    // Sort order inside build() depends on centroids only, so pre-sorting
    // by id keeps construction independent of input order.
    std::sort(primitives_.begin(), primitives_.end(),
              [](const bvh_primitive& x, const bvh_primitive& y) {
                return std::pair(x.object, x.triangle) <
                       std::pair(y.object, y.triangle);
              });
    nodes_.reserve(primitives_.size() * 2);
    build(0, int(primitives_.size()));
  }

  const std::vector<bvh_node>& nodes() const { return nodes_; }
  const std::vector<bvh_primitive>& primitives() const { return primitives_; }

  // Nearest intersection along the ray among objects enabled in
  // `object_mask` (bit i = scene object i). Ties on t prefer the lower
  // (object, triangle) id, matching a brute-force scan in id order.
  std::optional<scene_hit> trace(const ray& r,
                                 uint64_t object_mask = all_objects_mask) const {
    vec3 inv = {1.0 / r.direction.x, 1.0 / r.direction.y, 1.0 / r.direction.z};
    std::optional<scene_hit> best;
    double best_t = std::numeric_limits<double>::infinity();
    int stack[64];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const bvh_node& node = nodes_[size_t(stack[--top])];
      if (!intersect_aabb(r.origin, inv, node.box, 0.0, best_t)) continue;
      if (node.count > 0) {
        for (int i = node.first; i < node.first + node.count; i++) {
          const bvh_primitive& prim = primitives_[size_t(i)];
          if (!(object_mask & (uint64_t(1) << uint64_t(prim.object % 64))))
            continue;
          auto t = intersect_triangle(r, prim.a, prim.b, prim.c);
          if (!t) continue;
          bool closer = *t < best_t;
          bool tie_wins =
              *t == best_t && best &&
              std::pair(prim.object, prim.triangle) <
                  std::pair(best->object, best->triangle);
          if (closer || tie_wins) {
            best_t = *t;
            vec3 n = normalize(cross(prim.b - prim.a, prim.c - prim.a));
            best = scene_hit{prim.object, prim.triangle, *t,
                             r.origin + r.direction * *t, n};
          }
        }
      } else {
        stack[top++] = node.left;
        stack[top++] = node.right;
      }
    }
    return best;
  }

 private:
  int build(int first, int count) {
    bvh_node node;
    node.first = first;
    node.count = count;
    for (int i = first; i < first + count; i++) {
      node.box.expand(primitives_[size_t(i)].a);
      node.box.expand(primitives_[size_t(i)].b);
      node.box.expand(primitives_[size_t(i)].c);
    }
    int index = int(nodes_.size());
    nodes_.push_back(node);
    if (count <= leaf_size) return index;

    aabb centroid_box;
    for (int i = first; i < first + count; i++)
      centroid_box.expand(centroid(primitives_[size_t(i)]));
    vec3 extent = centroid_box.extent();
    int axis = extent.x >= extent.y && extent.x >= extent.z ? 0
               : extent.y >= extent.z                       ? 1
                                                            : 2;
    if (extent[axis] <= 0.0) return index;  // all centroids equal: keep leaf

    int mid = first + count / 2;
    std::nth_element(primitives_.begin() + first, primitives_.begin() + mid,
                     primitives_.begin() + first + count,
                     [axis](const bvh_primitive& x, const bvh_primitive& y) {
                       double cx = centroid(x)[axis], cy = centroid(y)[axis];
                       if (cx != cy) return cx < cy;
                       return std::pair(x.object, x.triangle) <
                              std::pair(y.object, y.triangle);
                     });
    nodes_[size_t(index)].count = 0;
    nodes_[size_t(index)].left = build(first, mid - first);
    nodes_[size_t(index)].right = build(mid, first + count - mid);
    return index;
  }

  static vec3 centroid(const bvh_primitive& p) {
    return (p.a + p.b + p.c) / 3.0;
  }

  std::vector<bvh_primitive> primitives_;
  std::vector<bvh_node> nodes_;
};

}  // namespace graspgen

#endif
