#pragma once

#include <cmath>

#include "polyft/error.hpp"
#include "polyft/mesh.hpp"
#include "polyft/polygon.hpp"
#include "polyft/vec.hpp"

// Exact Fourier transforms of constant unit densities over polygons and
// polyhedral volumes, with the convention FT(q) = integral of exp(+i q.r).
//
// The volume integral reduces to a sum over facets, and each facet's
// in-plane integral reduces to a sum over its edges, so a transform value
// costs O(edges) with no quadrature error. The only numerically delicate
// spots are the q -> 0 and q-perpendicular -> 0 limits, which are handled
// by explicit branches and by series forms of sin(u)/u.

namespace polyft {

// |q| at or below 1e-12 / bbox_diagonal collapses to the zero-q limit
// (area or volume).
inline constexpr double k_eps_q = 1e-12;

// |q_perp| / |q| at or below this collapses the in-plane edge sum to the
// facet area.
inline constexpr double k_eps_perp = 1e-9;

namespace detail {

// sin(u)/u; 4-term series below |u| = 1e-4 (error ~ u^8/9!, far below 1 ulp).
inline double sinc(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0 - u2 * u2 * u2 / 5040.0;
  }
  return std::sin(u) / u;
}

// sin(u)/u - 1 with full relative accuracy. Subtracting 1 from the rounded
// sinc value would leave eps-level absolute noise, which the edge sums
// amplify by 1/|q_perp| as q tends to zero. Series below |u| = 1e-2, where
// the next term u^8/9! is under 1 ulp of the result.
inline double sinc_minus_one(double u) {
  if (std::abs(u) < 1e-2) {
    const double u2 = u * u;
    return u2 * (-1.0 / 6.0 + u2 * (1.0 / 120.0 - u2 / 5040.0));
  }
  return std::sin(u) / u - 1.0;
}

inline Complex cis(double x) { return {std::cos(x), std::sin(x)}; }

// exp(i x) - 1 = 2 i sin(x/2) exp(i x/2): full relative accuracy near x = 0,
// where the direct form loses the real part to cancellation.
inline Complex cis_minus_one(double x) {
  const double s = std::sin(0.5 * x);
  const double c = std::cos(0.5 * x);
  return {-2.0 * s * s, 2.0 * s * c};
}

// (exp(i v) - 1) / v = i exp(i v/2) sinc(v/2); equals exactly i at v = 0.
inline Complex phase_factor(double v) {
  const double half = 0.5 * v;
  const double s = sinc(half);
  return {-s * std::sin(half), s * std::cos(half)};
}

}  // namespace detail

// Contribution of one directed segment of a counter-clockwise planar
// contour: -(q.n_hat) |d| / |q|^2 * exp(i q.mid) * i sinc(q.d / 2),
// with d = r1 - r0 and mid the segment midpoint. Summed around a closed
// contour this yields the polygon transform.
inline Complex ft_segment_2d(Vec2 q, Vec2 r0, Vec2 r1) {
  const Vec2 n_hat = segment_normal_2d(r0, r1);
  const double q2 = dot(q, q);
  if (q2 == 0.0) {
    throw NumericError("segment term requires |q| > 0");
  }
  const Vec2 d = r1 - r0;
  const Vec2 mid = 0.5 * (r0 + r1);
  const double u = 0.5 * dot(q, d);
  const double pref = -dot(q, n_hat) * norm(d) / q2;
  return pref * detail::cis(dot(q, mid)) * Complex(0.0, detail::sinc(u));
}

// Transform of a constant unit density over a counter-clockwise simple
// polygon. Returns (area, 0) when |q| is below the small-q threshold.
//
// The edge sum uses the subtracted form: the per-edge prefactors sum to
// zero around a closed contour, so each term may be taken relative to its
// own q -> 0 limit. That keeps every term O(q . extent) and makes the sum
// uniformly accurate however small q gets, instead of cancelling O(1)
// contributions.
inline Complex ft_polygon_2d(Vec2 q, const Polygon2D& poly) {
  const std::size_t n = poly.vertices.size();
  if (n < 3) {
    throw DegenerateFacet("polygon needs at least 3 vertices");
  }
  const double q_mag = std::sqrt(dot(q, q));
  if (q_mag * bbox_diagonal(poly) <= k_eps_q) {
    return {polygon_area(poly), 0.0};
  }
  const double q2 = dot(q, q);
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly.vertices[i];
    const Vec2 b = poly.vertices[(i + 1) % n];
    const Vec2 d = b - a;
    if (norm(d) <= k_degenerate_segment) {
      throw DegenerateSegment("polygon edge shorter than 1e-14");
    }
    // q . (outward normal times length) == cross(q, d) rotated: qx dy - qy dx.
    const double pref = -(q.x * d.y - q.y * d.x) / q2;
    const double sm1 = detail::sinc_minus_one(0.5 * dot(q, d));
    const Vec2 mid = 0.5 * (a + b);
    // exp(i q.mid) sinc - 1, assembled without cancellation.
    const Complex e = detail::cis_minus_one(dot(q, mid)) * (1.0 + sm1) +
                      Complex(sm1, 0.0);
    sum += pref * Complex(-e.imag(), e.real());  // pref * i * e
  }
  return sum;
}

// Axis-aligned rectangle [0,a] x [0,b]: the product of two 1-D factors
// (exp(i q_u u) - 1) / (i q_u). Exactly (a b, 0) at q = 0.
inline Complex ft_rectangle(Vec2 q, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidSpec("rectangle dimensions must be positive");
  }
  const Complex fx = a * detail::phase_factor(q.x * a);
  const Complex fy = b * detail::phase_factor(q.y * b);
  return -fx * fy;
}

// q split into components normal and tangential to a facet's plane.
struct FacetFrame {
  Vec3 n_hat;        // unit outward normal
  double q_par = 0;  // q . n_hat
  Vec3 q_perp;       // q - q_par * n_hat, in-plane component
  double r_par = 0;  // n_hat . r0, plane offset from the origin
};

inline FacetFrame decompose_facet(Vec3 q, const SurfaceMesh& mesh,
                                  const Facet& facet) {
  FacetFrame f;
  f.n_hat = facet_normal(mesh, facet);
  f.q_par = dot(q, f.n_hat);
  f.q_perp = q - f.q_par * f.n_hat;
  f.r_par = dot(f.n_hat, detail::facet_vertex(mesh, facet, 0));
  return f;
}

// One facet's contribution to the volume transform:
//   (-i q_par / |q|^2) exp(i q_par r_par) * B
// where B is the transform of the facet polygon in its own plane,
// evaluated at q_perp via the same subtracted-form edge sum as the 2-D
// case (per-edge prefactor q_perp . (n_hat x d) / |q_perp|^2). When q is
// normal to the facet within k_eps_perp, B degenerates to the facet area.
inline Complex ft_facet(Vec3 q, const SurfaceMesh& mesh, const Facet& facet) {
  const double q2 = norm2(q);
  if (q2 == 0.0) {
    throw NumericError("facet term requires |q| > 0");
  }
  const FacetFrame f = decompose_facet(q, mesh, facet);
  const Complex outer =
      Complex(0.0, -f.q_par / q2) * detail::cis(f.q_par * f.r_par);
  const double qp2 = norm2(f.q_perp);
  if (std::sqrt(qp2) <= k_eps_perp * std::sqrt(q2)) {
    return outer * facet_area(mesh, facet);
  }
  const std::size_t n = facet.indices.size();
  Complex bracket{};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = detail::facet_vertex(mesh, facet, i);
    const Vec3& b = detail::facet_vertex(mesh, facet, (i + 1) % n);
    const Vec3 d = b - a;
    if (norm(d) <= k_degenerate_segment) {
      throw DegenerateSegment("facet edge shorter than 1e-14");
    }
    const double pref = dot(f.q_perp, cross(f.n_hat, d)) / qp2;
    const double sm1 = detail::sinc_minus_one(0.5 * dot(f.q_perp, d));
    const Vec3 mid = 0.5 * (a + b);
    const Complex e = detail::cis_minus_one(dot(f.q_perp, mid)) * (1.0 + sm1) +
                      Complex(sm1, 0.0);
    bracket += pref * Complex(-e.imag(), e.real());  // pref * i * e
  }
  return outer * bracket;
}

// Transform of a constant unit density over the enclosed volume: the sum
// of facet terms in facet order. Returns (signed volume, 0) when |q| is
// below the small-q threshold.
inline Complex ft_mesh(Vec3 q, const SurfaceMesh& mesh) {
  require_watertight(mesh);
  if (norm(q) * bbox_diagonal(mesh) <= k_eps_q) {
    return {detail::signed_volume_unchecked(mesh), 0.0};
  }
  Complex sum{};
  for (const Facet& facet : mesh.facets) {
    sum += ft_facet(q, mesh, facet);
  }
  return sum;
}

// Axis-aligned box [0,a] x [0,b] x [0,c]: product of three 1-D factors.
// Exactly (a b c, 0) at q = 0.
inline Complex ft_prism(Vec3 q, double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw InvalidSpec("prism dimensions must be positive");
  }
  const Complex fx = a * detail::phase_factor(q.x * a);
  const Complex fy = b * detail::phase_factor(q.y * b);
  const Complex fz = c * detail::phase_factor(q.z * c);
  return Complex(0.0, 1.0) * fx * fy * fz;
}

// Closed form for a ball of the given radius centered at the origin:
//   4 pi (sin(qR) - qR cos(qR)) / q^3,
// with the series 4 pi R^3 (1/3 - x^2/30 + x^4/840 - x^6/45360), x = qR,
// below x = 1e-2. The direct form cancels like x^3/3 for small x, costing
// about 3 eps / x^2 in relative accuracy, so the switchover keeps both
// branches accurate to ~1e-11 at the seam. Real-valued by symmetry;
// depends on |q| only.
inline Complex ft_sphere_analytic(double q_mag, double radius) {
  if (!(radius > 0.0)) {
    throw InvalidSpec("sphere radius must be positive");
  }
  const double x = std::abs(q_mag) * radius;
  constexpr double four_pi = 4.0 * 3.14159265358979323846;
  if (x < 1e-2) {
    const double x2 = x * x;
    const double r3 = radius * radius * radius;
    return {four_pi * r3 *
                (1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0 -
                 x2 * x2 * x2 / 45360.0),
            0.0};
  }
  const double q = std::abs(q_mag);
  return {four_pi * (std::sin(x) - x * std::cos(x)) / (q * q * q), 0.0};
}

}  // namespace polyft
