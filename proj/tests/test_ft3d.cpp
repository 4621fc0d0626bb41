#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "polyft/fixtures.hpp"
#include "polyft/ft.hpp"
#include "polyft/generate.hpp"
#include "polyft/mesh_io.hpp"
#include "support/oracles.hpp"
#include "support/props.hpp"
#include "support/test_rng.hpp"

using namespace polyft;
using testsupport::k_pi;

TEST_CASE("decompose_facet splits q exactly") {
  testsupport::Rng rng(501);
  for (int i = 0; i < 50; ++i) {
    const SurfaceMesh tet = testsupport::random_tet(rng);
    const Vec3 q = rng.vec3(-10.0, 10.0);
    if (norm(q) < 1e-2) continue;
    for (const Facet& facet : tet.facets) {
      const FacetFrame f = decompose_facet(q, tet, facet);
      CHECK(std::abs(norm(f.n_hat) - 1.0) < 1e-14);
      CHECK(std::abs(dot(f.q_perp, f.n_hat)) <= 1e-13 * norm(q));
      CHECK(norm(f.q_par * f.n_hat + f.q_perp - q) <= 1e-13 * norm(q));
    }
  }
}

TEST_CASE("ft_facet closed-form values on the unit cube") {
  const SurfaceMesh cube = testsupport::make_quad_cube();
  // facets: [0] z=0, [1] z=1, [2] y=0, [3] x=1, [4] y=1, [5] x=0.

  // q along +z on the top face: q_par = 2, r_par = 1, area branch applies
  // and the term is -(i/2) e^{2i}.
  const Complex top = ft_facet({0, 0, 2}, cube, cube.facets[1]);
  CHECK(top.real() == Catch::Approx(std::sin(2.0) / 2.0).epsilon(1e-14));
  CHECK(top.imag() == Catch::Approx(-std::cos(2.0) / 2.0).epsilon(1e-14));

  // Bottom face: q_par = -2, r_par = 0, term is exactly i/2.
  const Complex bottom = ft_facet({0, 0, 2}, cube, cube.facets[0]);
  CHECK(bottom.real() == 0.0);
  CHECK(bottom.imag() == 0.5);

  // q in the facet plane contributes exactly nothing.
  const Complex in_plane = ft_facet({3, 1.5, 0}, cube, cube.facets[1]);
  CHECK(std::abs(in_plane) == 0.0);

  CHECK_THROWS_AS(ft_facet({0, 0, 0}, cube, cube.facets[0]), NumericError);

  // The two facet branches agree across the q_perp threshold.
  CHECK(testsupport::prop_branch_continuity(40, 502) < 1.0);
}

TEST_CASE("ft_mesh matches closed forms on boxes") {
  const SurfaceMesh cube = generate({});
  CHECK(ft_mesh({0, 0, 0}, cube) == Complex(1.0, 0.0));
  CHECK(std::abs(ft_mesh({2.0 * k_pi, 0, 0}, cube)) < 1e-12);

  const Complex v = ft_mesh({k_pi, k_pi, k_pi}, cube);
  CHECK(v.imag() == Catch::Approx(-8.0 / (k_pi * k_pi * k_pi)).epsilon(1e-12));
  CHECK(std::abs(v.real()) < 1e-14);

  CHECK(testsupport::prop_prism_equivalence(100, 503) < 1e-10);
}

TEST_CASE("ft_prism closed forms") {
  CHECK(ft_prism({0, 0, 0}, 0.5, 2.0, 3.0) == Complex(3.0, 0.0));

  const Complex v = ft_prism({k_pi, k_pi, k_pi}, 1.0, 1.0, 1.0);
  CHECK(v.imag() == Catch::Approx(-8.0 / (k_pi * k_pi * k_pi)).epsilon(1e-13));
  CHECK(std::abs(v.real()) < 1e-15);

  CHECK(std::abs(ft_prism({2.0 * k_pi, 0.3, -0.4}, 1.0, 1.0, 1.0)) < 1e-12);
  CHECK_THROWS_AS(ft_prism({1, 1, 1}, 1.0, 0.0, 1.0), InvalidSpec);
}

TEST_CASE("ft_mesh agrees with volume quadrature on tetrahedra") {
  const double s = 0.8;
  const SurfaceMesh regular = testsupport::make_tet(
      {s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s});
  const Vec3 q{1.3, -0.7, 2.1};
  const Complex direct = ft_mesh(q, regular);
  const Complex quad = testsupport::tet_ft_quadrature(
      regular.vertices[0], regular.vertices[1], regular.vertices[2],
      regular.vertices[3], q);
  CHECK(std::abs(direct - quad) <= 1e-10 * (1.0 + std::abs(direct)));

  testsupport::Rng rng(504);
  for (int i = 0; i < 10; ++i) {
    const SurfaceMesh tet = testsupport::random_tet(rng);
    const Vec3 qq = rng.vec3(-6.0, 6.0);
    const Complex d = ft_mesh(qq, tet);
    const Complex w = testsupport::mesh_ft_quadrature(tet, qq);
    CHECK(std::abs(d - w) <= 1e-9 * (1.0 + std::abs(d)));
  }
}

TEST_CASE("ft_mesh agrees with volume quadrature on the cube") {
  const SurfaceMesh cube = generate({});
  testsupport::Rng rng(505);
  for (int i = 0; i < 6; ++i) {
    const Vec3 q = rng.vec3(-5.0, 5.0);
    const Complex direct = ft_mesh(q, cube);
    const Complex quad = testsupport::mesh_ft_quadrature(cube, q);
    CHECK(std::abs(direct - quad) <= 1e-9 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("ft_mesh requires a watertight mesh") {
  SurfaceMesh open_cube = generate({});
  open_cube.facets.pop_back();
  CHECK_THROWS_AS(ft_mesh({1, 1, 1}, open_cube), OpenMesh);
}

TEST_CASE("ft_sphere_analytic closed forms") {
  constexpr double four_pi = 4.0 * k_pi;
  CHECK(ft_sphere_analytic(0.0, 1.0) == Complex(four_pi / 3.0, 0.0));
  CHECK(ft_sphere_analytic(0.0, 2.0).real() ==
        Catch::Approx(four_pi * 8.0 / 3.0).epsilon(1e-15));

  // At qR = pi the closed form collapses to 4 R^3 / pi... for R = 1: 4/pi.
  CHECK(ft_sphere_analytic(k_pi, 1.0).real() ==
        Catch::Approx(4.0 / k_pi).epsilon(1e-13));

  // Series and direct branches join continuously at the x = 1e-2 seam;
  // the budget is the direct form's cancellation conditioning there.
  const double r = 1.0;
  const double below = ft_sphere_analytic(1e-2 * (1.0 - 1e-9), r).real();
  const double above = ft_sphere_analytic(1e-2 * (1.0 + 1e-9), r).real();
  CHECK(std::abs(below - above) <= 1e-10 * std::abs(below));

  // Depends only on |q|.
  CHECK(ft_sphere_analytic(-2.5, 1.3) == ft_sphere_analytic(2.5, 1.3));
  CHECK_THROWS_AS(ft_sphere_analytic(1.0, 0.0), InvalidSpec);
}

TEST_CASE("ft_sphere_analytic vanishes where tan(x) = x") {
  // First interior zero of sin(x) - x cos(x), bracketed in [pi, 3 pi / 2].
  const double root = testsupport::bisect(
      [](double x) { return std::sin(x) - x * std::cos(x); }, k_pi,
      1.5 * k_pi);
  CHECK(root == Catch::Approx(4.493409457909064).epsilon(1e-12));
  CHECK(std::abs(ft_sphere_analytic(root, 1.0)) < 1e-10);
  CHECK(std::abs(ft_sphere_analytic(root / 2.0, 2.0)) < 1e-10);
}

TEST_CASE("ft_sphere_analytic matches the half-order Bessel form") {
  // 4 pi (sin x - x cos x) / x^3 * R^3 equals
  // 4 pi sqrt(pi / 2) J_{3/2}(x) / x^{3/2} * R^3; the prefactor can also
  // be written 16 pi Gamma(5/2) / (3 sqrt(2)).
  const double coef_direct = 4.0 * k_pi * std::sqrt(k_pi / 2.0);
  const double coef_gamma =
      16.0 * k_pi * std::tgamma(2.5) / (3.0 * std::sqrt(2.0));
  CHECK(coef_direct == Catch::Approx(coef_gamma).epsilon(1e-14));

  for (const double radius : {1.0, 0.6}) {
    for (const double q : {0.5, 1.7, 3.3, 9.1}) {
      const double x = q * radius;
      const double bessel = coef_direct * radius * radius * radius *
                            std::cyl_bessel_j(1.5, x) / std::pow(x, 1.5);
      const double direct = ft_sphere_analytic(q, radius).real();
      CHECK(direct == Catch::Approx(bessel).epsilon(1e-12));
    }
  }
}

TEST_CASE("sphere meshes converge to the analytic ball transform") {
  // Volume-matched icosphere, modest level: the error of the polyhedral
  // transform against the ball's closed form is at the 2e-4 level already.
  GeneratorSpec spec;
  spec.kind = ShapeKind::icosphere;
  spec.subdivision = 2;
  spec.match_volume = 4.0 / 3.0 * k_pi;
  const SurfaceMesh mesh = generate(spec);

  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double q = 0.5 + (10.0 - 0.5) * i / 40.0;
    const double analytic = ft_sphere_analytic(q, 1.0).real();
    const Complex poly = ft_mesh({q, 0, 0}, mesh);
    worst = std::max(worst, std::abs(poly - Complex(analytic, 0.0)));
    scale = std::max(scale, std::abs(analytic));
  }
  CHECK(worst / scale < 2.3e-4);
}

TEST_CASE("fixture transform is pinned at a reference point") {
  const SurfaceMesh mesh = parse_surfacemesh(two_spheres_surfacemesh());
  CHECK(ft_mesh({0, 0, 0}, mesh).real() ==
        Catch::Approx(6.790496515272061).epsilon(1e-12));
  const Complex v = ft_mesh({1.0, 0.5, 0.0}, mesh);
  CHECK(v.real() == Catch::Approx(4.805669324470641).epsilon(1e-12));
  CHECK(v.imag() == Catch::Approx(0.014593922279632).epsilon(1e-9));
}

TEST_CASE("small-q transform approaches the volume") {
  CHECK(testsupport::prop_small_q_consistency() < 1.0);
}
