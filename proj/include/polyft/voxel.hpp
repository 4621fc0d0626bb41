#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <vector>

#include "polyft/error.hpp"
#include "polyft/ft.hpp"
#include "polyft/mesh.hpp"

namespace polyft {

// Cubic cell grid aligned to a mesh: cell corners sit at
// origin + pitch * (ix, iy, iz) and the lattice is symmetric about the
// mesh's volume centroid. Occupancy is by cell center, x fastest in the
// linear index.
struct VoxelGrid {
  double pitch = 0.0;
  Vec3 origin{};
  std::array<int, 3> dims{0, 0, 0};
  std::vector<bool> occupancy;

  std::size_t index(int ix, int iy, int iz) const {
    return static_cast<std::size_t>(ix) +
           static_cast<std::size_t>(dims[0]) *
               (static_cast<std::size_t>(iy) +
                static_cast<std::size_t>(dims[1]) *
                    static_cast<std::size_t>(iz));
  }

  bool occupied(int ix, int iy, int iz) const {
    return occupancy[index(ix, iy, iz)];
  }

  Vec3 corner(int ix, int iy, int iz) const {
    return origin + pitch * Vec3{static_cast<double>(ix),
                                 static_cast<double>(iy),
                                 static_cast<double>(iz)};
  }

  Vec3 center(int ix, int iy, int iz) const {
    return corner(ix, iy, iz) + (0.5 * pitch) * Vec3{1, 1, 1};
  }

  std::size_t cell_count() const {
    return static_cast<std::size_t>(dims[0]) *
           static_cast<std::size_t>(dims[1]) *
           static_cast<std::size_t>(dims[2]);
  }

  std::size_t occupied_count() const {
    std::size_t n = 0;
    for (const bool b : occupancy) n += b ? 1 : 0;
    return n;
  }
};

namespace detail {

struct Tri {
  Vec3 p0, p1, p2;
};

// x-values where a +x ray through (y, z) crosses the triangle interior.
// Returns false when the hit is too close to call (within `margin` of an
// edge in barycentric terms, or a ray-parallel triangle overlapping the
// ray), which the caller resolves by jittering the whole row.
inline bool ray_x_crossings(const Tri& t, double y, double z,
                            std::vector<double>& xs) {
  constexpr double margin = 1e-12;
  const double e1y = t.p1.y - t.p0.y, e1z = t.p1.z - t.p0.z;
  const double e2y = t.p2.y - t.p0.y, e2z = t.p2.z - t.p0.z;
  const double det = e1y * e2z - e1z * e2y;
  const double scale2 = (e1y * e1y + e1z * e1z) + (e2y * e2y + e2z * e2z);
  if (std::abs(det) <= margin * scale2) {
    // Projected triangle is (nearly) a segment: the facet is parallel to
    // the ray. Grazing only if the ray passes through its yz extent.
    const double pad = margin * (1.0 + std::sqrt(scale2));
    const double ylo = std::min({t.p0.y, t.p1.y, t.p2.y}) - pad;
    const double yhi = std::max({t.p0.y, t.p1.y, t.p2.y}) + pad;
    const double zlo = std::min({t.p0.z, t.p1.z, t.p2.z}) - pad;
    const double zhi = std::max({t.p0.z, t.p1.z, t.p2.z}) + pad;
    return !(y >= ylo && y <= yhi && z >= zlo && z <= zhi);
  }
  const double py = y - t.p0.y, pz = z - t.p0.z;
  const double b1 = (py * e2z - pz * e2y) / det;
  const double b2 = (e1y * pz - e1z * py) / det;
  const double b0 = 1.0 - b1 - b2;
  const double lo = std::min({b0, b1, b2});
  if (lo > margin) {
    xs.push_back(b0 * t.p0.x + b1 * t.p1.x + b2 * t.p2.x);
    return true;
  }
  return lo < -margin;  // strictly outside is fine; near an edge is not
}

}  // namespace detail

// Center-point occupancy test against the mesh surface by +x ray-crossing
// parity, one ray per (iy, iz) row. Rows whose ray grazes an edge, vertex,
// or ray-parallel facet are retried with the ray origin nudged in the yz
// plane; the nudge radius starts at 1e-7 * pitch and doubles per retry
// while its direction advances by the golden angle, so no facet edge can
// stay parallel to the jitter. Deterministic, no randomness involved.
inline VoxelGrid voxelize(const SurfaceMesh& mesh, double pitch) {
  if (!(pitch > 0.0)) {
    throw InvalidSpec("voxel pitch must be positive");
  }
  require_watertight(mesh);

  const Vec3 centroid = mesh_centroid(mesh);
  const Bounds3 box = bounds(mesh);

  VoxelGrid grid;
  grid.pitch = pitch;
  std::array<int, 3> kmin{};
  const double lo[3] = {box.lo.x - centroid.x, box.lo.y - centroid.y,
                        box.lo.z - centroid.z};
  const double hi[3] = {box.hi.x - centroid.x, box.hi.y - centroid.y,
                        box.hi.z - centroid.z};
  for (int axis = 0; axis < 3; ++axis) {
    int below = static_cast<int>(std::floor(lo[axis] / pitch));
    int above = static_cast<int>(std::ceil(hi[axis] / pitch));
    // Symmetrize about the centroid.
    above = std::max({above, -below, 1});
    below = -above;
    grid.dims[axis] = above - below;
    kmin[axis] = below;
  }
  grid.origin = centroid + pitch * Vec3{static_cast<double>(kmin[0]),
                                        static_cast<double>(kmin[1]),
                                        static_cast<double>(kmin[2])};
  grid.occupancy.assign(grid.cell_count(), false);

  std::vector<detail::Tri> tris;
  for (const Facet& facet : mesh.facets) {
    for (std::size_t i = 1; i + 1 < facet.indices.size(); ++i) {
      tris.push_back({detail::facet_vertex(mesh, facet, 0),
                      detail::facet_vertex(mesh, facet, i),
                      detail::facet_vertex(mesh, facet, i + 1)});
    }
  }

  std::vector<double> xs;
  for (int iz = 0; iz < grid.dims[2]; ++iz) {
    for (int iy = 0; iy < grid.dims[1]; ++iy) {
      const Vec3 row = grid.center(0, iy, iz);
      double offset_y = 0.0;
      double offset_z = 0.0;
      for (int attempt = 0;; ++attempt) {
        if (attempt > 32) {
          throw NumericError("voxelizer ray jitter failed to converge");
        }
        xs.clear();
        bool ok = true;
        for (const detail::Tri& t : tris) {
          if (!detail::ray_x_crossings(t, row.y + offset_y, row.z + offset_z,
                                       xs)) {
            ok = false;
            break;
          }
        }
        if (ok) break;
        const double radius = std::ldexp(1e-7 * pitch, attempt);
        const double theta = 2.399963229728653 * (attempt + 1);
        offset_y = radius * std::cos(theta);
        offset_z = radius * std::sin(theta);
      }
      std::sort(xs.begin(), xs.end());
      for (int ix = 0; ix < grid.dims[0]; ++ix) {
        const double xc = grid.center(ix, iy, iz).x;
        const std::size_t ahead =
            xs.end() - std::upper_bound(xs.begin(), xs.end(), xc);
        if (ahead % 2 == 1) {
          grid.occupancy[grid.index(ix, iy, iz)] = true;
        }
      }
    }
  }
  return grid;
}

// Transform of the union of occupied cells: each cell is a pitch-cube
// anchored at its low corner, so the exact cube transform is shared and
// only the corner phases differ. At q = 0 this is exactly
// pitch^3 * occupied_count.
inline Complex voxel_ft(const VoxelGrid& grid, Vec3 q) {
  Complex phases{};
  for (int iz = 0; iz < grid.dims[2]; ++iz) {
    for (int iy = 0; iy < grid.dims[1]; ++iy) {
      for (int ix = 0; ix < grid.dims[0]; ++ix) {
        if (grid.occupancy[grid.index(ix, iy, iz)]) {
          phases += detail::cis(dot(q, grid.corner(ix, iy, iz)));
        }
      }
    }
  }
  return phases * ft_prism(q, grid.pitch, grid.pitch, grid.pitch);
}

// One "ix iy iz" line per occupied cell, ascending linear index.
inline void write_occupancy(const VoxelGrid& grid, std::ostream& out) {
  for (int iz = 0; iz < grid.dims[2]; ++iz) {
    for (int iy = 0; iy < grid.dims[1]; ++iy) {
      for (int ix = 0; ix < grid.dims[0]; ++ix) {
        if (grid.occupancy[grid.index(ix, iy, iz)]) {
          out << ix << ' ' << iy << ' ' << iz << '\n';
        }
      }
    }
  }
}

}  // namespace polyft
