#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "polyft/error.hpp"
#include "polyft/vec.hpp"

namespace polyft {

// Endpoint pairs closer than this are degenerate segments.
inline constexpr double k_degenerate_segment = 1e-14;

// Planar polygon, vertices in order, implicitly closed (last connects back
// to first). Counter-clockwise winding encloses positive area.
struct Polygon2D {
  std::vector<Vec2> vertices;
};

// Signed area by the shoelace formula: positive for counter-clockwise
// winding. Orientation mistakes surface as sign errors, not magnitude ones.
inline double polygon_area(const Polygon2D& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[(i + 1) % n];
    twice += cross(a, b);
  }
  return 0.5 * twice;
}

// Unit outward normal of the directed segment r0 -> r1, for a
// counter-clockwise contour: the direction rotated -90 degrees.
inline Vec2 segment_normal_2d(Vec2 r0, Vec2 r1) {
  const Vec2 d = r1 - r0;
  const double len = norm(d);
  if (len <= k_degenerate_segment) {
    throw DegenerateSegment("segment endpoints coincide within 1e-14");
  }
  return {d.y / len, -d.x / len};
}

// Axis-aligned bounding box diagonal, used to scale the small-|q| branch
// threshold.
inline double bbox_diagonal(const Polygon2D& poly) {
  if (poly.vertices.empty()) return 0.0;
  Vec2 lo = poly.vertices.front();
  Vec2 hi = lo;
  for (const Vec2& v : poly.vertices) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  return norm(hi - lo);
}

}  // namespace polyft
