#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polyft/error.hpp"
#include "polyft/mesh.hpp"

namespace polyft {

enum class ShapeKind { cube, prism, icosphere, uvsphere };

// Shape request. `a` is the cube edge; prisms use (a, b, c); spheres use
// `radius` and `subdivision`. When `match_volume` is set the finished mesh
// is rescaled uniformly about its volume centroid to enclose exactly that
// volume.
struct GeneratorSpec {
  ShapeKind kind = ShapeKind::cube;
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double radius = 1.0;
  int subdivision = 0;
  std::optional<double> match_volume;
};

// Facet counts quadruple per icosphere level; 7 keeps the worst case at
// 20 * 4^7 facets.
inline constexpr int k_max_subdivision = 7;

namespace detail {

inline SurfaceMesh make_prism(double a, double b, double c) {
  SurfaceMesh mesh;
  mesh.vertices = {{0, 0, 0}, {a, 0, 0}, {a, b, 0}, {0, b, 0},
                   {0, 0, c}, {a, 0, c}, {a, b, c}, {0, b, c}};
  // Outward counter-clockwise winding on every face.
  mesh.facets = {{{0, 2, 1}}, {{0, 3, 2}},   // z = 0
                 {{4, 5, 6}}, {{4, 6, 7}},   // z = c
                 {{0, 1, 5}}, {{0, 5, 4}},   // y = 0
                 {{1, 2, 6}}, {{1, 6, 5}},   // x = a
                 {{2, 3, 7}}, {{2, 7, 6}},   // y = b
                 {{3, 0, 4}}, {{3, 4, 7}}};  // x = 0
  return mesh;
}

inline SurfaceMesh make_icosphere(double radius, int level) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, t, 0},  {1, t, 0},  {-1, -t, 0}, {1, -t, 0},
      {0, -1, t},  {0, 1, t},  {0, -1, -t}, {0, 1, -t},
      {t, 0, -1},  {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  auto project = [radius](Vec3 v) { return (radius / norm(v)) * v; };
  for (Vec3& v : verts) v = project(v);

  std::vector<Facet> faces = {
      {{0, 11, 5}}, {{0, 5, 1}},  {{0, 1, 7}},   {{0, 7, 10}}, {{0, 10, 11}},
      {{1, 5, 9}},  {{5, 11, 4}}, {{11, 10, 2}}, {{10, 7, 6}}, {{7, 1, 8}},
      {{3, 9, 4}},  {{3, 4, 2}},  {{3, 2, 6}},   {{3, 6, 8}},  {{3, 8, 9}},
      {{4, 9, 5}},  {{2, 4, 11}}, {{6, 2, 10}},  {{8, 6, 7}},  {{9, 8, 1}}};

  for (int pass = 0; pass < level; ++pass) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int i, int j) {
      const std::pair<int, int> key{std::min(i, j), std::max(i, j)};
      const auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const int index = static_cast<int>(verts.size());
      verts.push_back(project(0.5 * (verts[static_cast<std::size_t>(i)] +
                                     verts[static_cast<std::size_t>(j)])));
      midpoint.emplace(key, index);
      return index;
    };
    std::vector<Facet> next;
    next.reserve(faces.size() * 4);
    for (const Facet& f : faces) {
      const int v0 = f.indices[0], v1 = f.indices[1], v2 = f.indices[2];
      const int m01 = mid(v0, v1), m12 = mid(v1, v2), m20 = mid(v2, v0);
      next.push_back({{v0, m01, m20}});
      next.push_back({{v1, m12, m01}});
      next.push_back({{v2, m20, m12}});
      next.push_back({{m01, m12, m20}});
    }
    faces = std::move(next);
  }
  return SurfaceMesh{std::move(verts), std::move(faces)};
}

// Latitude/longitude sphere: 2^(level+1) latitude bands, 2^(level+2)
// longitude segments. Pole caps are triangle fans; interior quads are
// split so every facet is exactly planar.
inline SurfaceMesh make_uvsphere(double radius, int level) {
  const int stacks = 2 << level;
  const int segs = 4 << level;
  const double pi = 3.14159265358979323846;

  SurfaceMesh mesh;
  mesh.vertices.push_back({0, 0, radius});
  for (int s = 1; s < stacks; ++s) {
    const double theta = pi * static_cast<double>(s) / stacks;
    for (int j = 0; j < segs; ++j) {
      const double phi = 2.0 * pi * static_cast<double>(j) / segs;
      mesh.vertices.push_back({radius * std::sin(theta) * std::cos(phi),
                               radius * std::sin(theta) * std::sin(phi),
                               radius * std::cos(theta)});
    }
  }
  mesh.vertices.push_back({0, 0, -radius});
  const int south = static_cast<int>(mesh.vertices.size()) - 1;

  auto ring = [&](int s, int j) { return 1 + (s - 1) * segs + (j % segs); };

  for (int j = 0; j < segs; ++j) {
    mesh.facets.push_back({{0, ring(1, j), ring(1, j + 1)}});
  }
  for (int s = 1; s + 1 < stacks; ++s) {
    for (int j = 0; j < segs; ++j) {
      const int a = ring(s, j), b = ring(s + 1, j);
      const int c = ring(s + 1, j + 1), d = ring(s, j + 1);
      mesh.facets.push_back({{a, b, c}});
      mesh.facets.push_back({{a, c, d}});
    }
  }
  for (int j = 0; j < segs; ++j) {
    mesh.facets.push_back({{south, ring(stacks - 1, j + 1), ring(stacks - 1, j)}});
  }
  return mesh;
}

}  // namespace detail

inline SurfaceMesh generate(const GeneratorSpec& spec) {
  if (spec.subdivision < 0 || spec.subdivision > k_max_subdivision) {
    throw InvalidSpec("subdivision level must be in [0, " +
                      std::to_string(k_max_subdivision) + "]");
  }
  SurfaceMesh mesh;
  switch (spec.kind) {
    case ShapeKind::cube:
      if (!(spec.a > 0.0)) throw InvalidSpec("cube edge must be positive");
      mesh = detail::make_prism(spec.a, spec.a, spec.a);
      break;
    case ShapeKind::prism:
      if (!(spec.a > 0.0) || !(spec.b > 0.0) || !(spec.c > 0.0)) {
        throw InvalidSpec("prism dimensions must be positive");
      }
      mesh = detail::make_prism(spec.a, spec.b, spec.c);
      break;
    case ShapeKind::icosphere:
      if (!(spec.radius > 0.0)) throw InvalidSpec("radius must be positive");
      mesh = detail::make_icosphere(spec.radius, spec.subdivision);
      break;
    case ShapeKind::uvsphere:
      if (!(spec.radius > 0.0)) throw InvalidSpec("radius must be positive");
      mesh = detail::make_uvsphere(spec.radius, spec.subdivision);
      break;
  }
  if (spec.match_volume) {
    const double target = *spec.match_volume;
    if (!(target > 0.0)) throw InvalidSpec("match volume must be positive");
    const double volume = mesh_volume(mesh);
    const double scale = std::cbrt(target / volume);
    const Vec3 center = mesh_centroid(mesh);
    for (Vec3& v : mesh.vertices) v = center + scale * (v - center);
  }
  return mesh;
}

}  // namespace polyft
