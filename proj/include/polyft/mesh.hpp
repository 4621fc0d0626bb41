#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyft/error.hpp"
#include "polyft/format.hpp"
#include "polyft/vec.hpp"

namespace polyft {

// One planar facet: zero-based vertex indices, wound counter-clockwise as
// seen from outside the solid.
struct Facet {
  std::vector<int> indices;
};

// Closed triangle/polygon surface bounding a solid of unit density.
// Unreferenced vertices are allowed and preserved by IO.
struct SurfaceMesh {
  std::vector<Vec3> vertices;
  std::vector<Facet> facets;
};

struct Bounds3 {
  Vec3 lo;
  Vec3 hi;
};

inline Bounds3 bounds(const SurfaceMesh& mesh) {
  Bounds3 b;
  if (mesh.vertices.empty()) return b;
  b.lo = b.hi = mesh.vertices.front();
  for (const Vec3& v : mesh.vertices) {
    b.lo.x = std::min(b.lo.x, v.x);
    b.lo.y = std::min(b.lo.y, v.y);
    b.lo.z = std::min(b.lo.z, v.z);
    b.hi.x = std::max(b.hi.x, v.x);
    b.hi.y = std::max(b.hi.y, v.y);
    b.hi.z = std::max(b.hi.z, v.z);
  }
  return b;
}

inline double bbox_diagonal(const SurfaceMesh& mesh) {
  const Bounds3 b = bounds(mesh);
  return norm(b.hi - b.lo);
}

namespace detail {

inline const Vec3& facet_vertex(const SurfaceMesh& mesh, const Facet& facet,
                                std::size_t i) {
  return mesh.vertices[static_cast<std::size_t>(facet.indices[i])];
}

inline bool facet_indices_valid(const SurfaceMesh& mesh, const Facet& facet) {
  for (int ix : facet.indices) {
    if (ix < 0 || static_cast<std::size_t>(ix) >= mesh.vertices.size()) {
      return false;
    }
  }
  return facet.indices.size() >= 3;
}

// Undirected edge key; indices fit in 32 bits.
inline std::uint64_t edge_key(int a, int b) {
  const std::uint64_t lo = static_cast<std::uint32_t>(std::min(a, b));
  const std::uint64_t hi = static_cast<std::uint32_t>(std::max(a, b));
  return (hi << 32) | lo;
}

struct EdgeCount {
  int a = -1;       // canonical low endpoint
  int b = -1;       // canonical high endpoint
  int forward = 0;  // traversals a -> b
  int backward = 0; // traversals b -> a
};

inline std::unordered_map<std::uint64_t, EdgeCount> count_edges(
    const SurfaceMesh& mesh) {
  std::unordered_map<std::uint64_t, EdgeCount> edges;
  for (const Facet& facet : mesh.facets) {
    const std::size_t n = facet.indices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const int u = facet.indices[i];
      const int v = facet.indices[(i + 1) % n];
      EdgeCount& e = edges[edge_key(u, v)];
      if (e.a < 0) {
        e.a = std::min(u, v);
        e.b = std::max(u, v);
      }
      if (u == e.a) {
        ++e.forward;
      } else {
        ++e.backward;
      }
    }
  }
  return edges;
}

}  // namespace detail

// Unit normal from the first three vertices: normalized
// (v1 - v0) x (v2 - v0). Outward for counter-clockwise winding.
inline Vec3 facet_normal(const SurfaceMesh& mesh, const Facet& facet) {
  if (!detail::facet_indices_valid(mesh, facet)) {
    throw DegenerateFacet("facet needs >= 3 in-range vertex indices");
  }
  const Vec3 e1 = detail::facet_vertex(mesh, facet, 1) -
                  detail::facet_vertex(mesh, facet, 0);
  const Vec3 e2 = detail::facet_vertex(mesh, facet, 2) -
                  detail::facet_vertex(mesh, facet, 0);
  const Vec3 n = cross(e1, e2);
  const double len = norm(n);
  // Degenerate when the sine of the angle between the edges is <= 1e-14.
  if (len <= 1e-14 * norm(e1) * norm(e2)) {
    throw DegenerateFacet("first three facet vertices are collinear");
  }
  return n / len;
}

// Facet area as half the magnitude of the vertex-loop cross-product sum.
// Exact for planar facets of any (simple) shape, convex or not.
inline double facet_area(const SurfaceMesh& mesh, const Facet& facet) {
  if (!detail::facet_indices_valid(mesh, facet)) {
    throw DegenerateFacet("facet needs >= 3 in-range vertex indices");
  }
  const std::size_t n = facet.indices.size();
  Vec3 s{};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = detail::facet_vertex(mesh, facet, i);
    const Vec3& b = detail::facet_vertex(mesh, facet, (i + 1) % n);
    s = s + cross(a, b);
  }
  return 0.5 * norm(s);
}

// Throws OpenMesh unless every undirected edge is shared by exactly two
// facets traversing it in opposite directions and every facet is a valid
// index list. This is the precondition gate for volume, centroid, and the
// volume transform.
inline void require_watertight(const SurfaceMesh& mesh) {
  for (std::size_t f = 0; f < mesh.facets.size(); ++f) {
    const Facet& facet = mesh.facets[f];
    if (!detail::facet_indices_valid(mesh, facet)) {
      throw OpenMesh("facet " + std::to_string(f) +
                     " has fewer than 3 vertices or an out-of-range index");
    }
    const std::size_t n = facet.indices.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (facet.indices[i] == facet.indices[(i + 1) % n]) {
        throw OpenMesh("facet " + std::to_string(f) +
                       " repeats a vertex along an edge");
      }
    }
  }
  for (const auto& [key, e] : detail::count_edges(mesh)) {
    (void)key;
    if (e.forward != 1 || e.backward != 1) {
      throw OpenMesh("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                     " is shared by " + std::to_string(e.forward + e.backward) +
                     " facet sides (want one per direction)");
    }
  }
}

namespace detail {

// Signed volume, no precondition checks: sum of signed tetrahedron volumes
// over a fan decomposition of every facet.
inline double signed_volume_unchecked(const SurfaceMesh& mesh) {
  double six_v = 0.0;
  for (const Facet& facet : mesh.facets) {
    const Vec3& p0 = facet_vertex(mesh, facet, 0);
    for (std::size_t i = 1; i + 1 < facet.indices.size(); ++i) {
      const Vec3& pi = facet_vertex(mesh, facet, i);
      const Vec3& pj = facet_vertex(mesh, facet, i + 1);
      six_v += dot(p0, cross(pi, pj));
    }
  }
  return six_v / 6.0;
}

}  // namespace detail

// Signed enclosed volume: positive for outward-oriented facets.
inline double mesh_volume(const SurfaceMesh& mesh) {
  require_watertight(mesh);
  return detail::signed_volume_unchecked(mesh);
}

// Volume centroid: signed-volume-weighted mean of the fan tetrahedron
// centroids (each tet spans the origin and a facet triangle).
inline Vec3 mesh_centroid(const SurfaceMesh& mesh) {
  require_watertight(mesh);
  double six_v = 0.0;
  Vec3 acc{};
  for (const Facet& facet : mesh.facets) {
    const Vec3& p0 = detail::facet_vertex(mesh, facet, 0);
    for (std::size_t i = 1; i + 1 < facet.indices.size(); ++i) {
      const Vec3& pi = detail::facet_vertex(mesh, facet, i);
      const Vec3& pj = detail::facet_vertex(mesh, facet, i + 1);
      const double det = dot(p0, cross(pi, pj));
      six_v += det;
      // Tet centroid is (0 + p0 + pi + pj) / 4; weight is det / 6.
      acc = acc + det * (p0 + pi + pj);
    }
  }
  const double volume = six_v / 6.0;
  return acc / (24.0 * volume);
}

struct ValidationReport {
  struct EdgeIssue {
    int v0 = 0;
    int v1 = 0;
    int forward = 0;
    int backward = 0;
  };
  struct PlanarityIssue {
    std::size_t facet = 0;
    double deviation = 0.0;
  };
  struct FacetIssue {
    std::size_t facet = 0;
    std::string reason;
  };

  std::vector<FacetIssue> degenerate_facets;
  std::vector<EdgeIssue> open_edges;
  std::vector<PlanarityIssue> nonplanar_facets;
  bool watertight = false;
  double signed_volume = 0.0;      // meaningful only when watertight
  double planarity_tolerance = 0.0;
  std::size_t vertex_count = 0;
  std::size_t facet_count = 0;
  std::size_t unreferenced_vertices = 0;  // informational, does not fail

  bool clean() const {
    return watertight && degenerate_facets.empty() && open_edges.empty() &&
           nonplanar_facets.empty() && signed_volume > 0.0;
  }

  std::string summary() const {
    std::string out;
    out += "vertices: " + std::to_string(vertex_count) +
           ", facets: " + std::to_string(facet_count) + "\n";
    out += "watertight: " + std::string(watertight ? "yes" : "no") + "\n";
    if (watertight) {
      out += "signed volume: " + detail::format_double(signed_volume) +
             (signed_volume > 0.0 ? "" : " (not positive: inward orientation)") +
             "\n";
    }
    out += "degenerate facets: " + std::to_string(degenerate_facets.size()) + "\n";
    for (const FacetIssue& fi : degenerate_facets) {
      out += "  facet " + std::to_string(fi.facet) + ": " + fi.reason + "\n";
    }
    out += "non-planar facets: " + std::to_string(nonplanar_facets.size()) + "\n";
    for (const PlanarityIssue& pi : nonplanar_facets) {
      out += "  facet " + std::to_string(pi.facet) + ": deviation " +
             detail::format_double(pi.deviation) + "\n";
    }
    out += "open or multiply-shared edges: " + std::to_string(open_edges.size()) + "\n";
    for (const EdgeIssue& ei : open_edges) {
      out += "  edge " + std::to_string(ei.v0) + "-" + std::to_string(ei.v1) +
             ": " + std::to_string(ei.forward) + " forward, " +
             std::to_string(ei.backward) + " backward\n";
    }
    if (unreferenced_vertices > 0) {
      out += "unreferenced vertices: " + std::to_string(unreferenced_vertices) +
             " (allowed)\n";
    }
    out += std::string("result: ") + (clean() ? "clean" : "invalid") + "\n";
    return out;
  }
};

// Non-throwing structural check: watertightness, facet planarity within
// 1e-9 of the bounding-box diagonal, outward orientation, degeneracies.
inline ValidationReport validate_mesh(const SurfaceMesh& mesh) {
  ValidationReport report;
  report.vertex_count = mesh.vertices.size();
  report.facet_count = mesh.facets.size();
  report.planarity_tolerance = 1e-9 * bbox_diagonal(mesh);

  std::vector<char> referenced(mesh.vertices.size(), 0);
  bool structure_ok = true;
  for (std::size_t f = 0; f < mesh.facets.size(); ++f) {
    const Facet& facet = mesh.facets[f];
    if (!detail::facet_indices_valid(mesh, facet)) {
      report.degenerate_facets.push_back(
          {f, "fewer than 3 vertices or index out of range"});
      structure_ok = false;
      continue;
    }
    const std::size_t n = facet.indices.size();
    for (int ix : facet.indices) referenced[static_cast<std::size_t>(ix)] = 1;
    bool repeated = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (facet.indices[i] == facet.indices[(i + 1) % n]) repeated = true;
    }
    if (repeated) {
      report.degenerate_facets.push_back({f, "repeated vertex along an edge"});
      structure_ok = false;
      continue;
    }
    try {
      const Vec3 n_hat = facet_normal(mesh, facet);
      const Vec3& origin = detail::facet_vertex(mesh, facet, 0);
      double deviation = 0.0;
      for (std::size_t i = 1; i < n; ++i) {
        const double d =
            std::abs(dot(n_hat, detail::facet_vertex(mesh, facet, i) - origin));
        deviation = std::max(deviation, d);
      }
      if (deviation > report.planarity_tolerance) {
        report.nonplanar_facets.push_back({f, deviation});
      }
    } catch (const DegenerateFacet&) {
      report.degenerate_facets.push_back({f, "first three vertices collinear"});
      structure_ok = false;
    }
  }

  for (std::size_t v = 0; v < referenced.size(); ++v) {
    if (!referenced[v]) ++report.unreferenced_vertices;
  }

  if (structure_ok) {
    for (const auto& [key, e] : detail::count_edges(mesh)) {
      (void)key;
      if (e.forward != 1 || e.backward != 1) {
        report.open_edges.push_back({e.a, e.b, e.forward, e.backward});
      }
    }
    std::sort(report.open_edges.begin(), report.open_edges.end(),
              [](const ValidationReport::EdgeIssue& x,
                 const ValidationReport::EdgeIssue& y) {
                return x.v0 != y.v0 ? x.v0 < y.v0 : x.v1 < y.v1;
              });
    report.watertight = report.open_edges.empty();
    if (report.watertight) {
      report.signed_volume = detail::signed_volume_unchecked(mesh);
    }
  }
  return report;
}

}  // namespace polyft
