// Acceptance gate: every release criterion runs here at its stated
// tolerance and prints exactly one "criterion N (...): PASS/FAIL" line.
// Failures are reported with the measured numbers, never masked.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "polyft/polyft.hpp"
#include "support/cli_helpers.hpp"
#include "support/oracles.hpp"
#include "support/props.hpp"
#include "support/test_rng.hpp"

using testsupport::k_pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void report(int n, const std::string& name, bool ok,
            const std::string& details) {
  std::cout << "criterion " << n << " (" << name << "): "
            << (ok ? "PASS" : "FAIL") << " (" << details << ")" << std::endl;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n - 1);
    out.push_back(lo * (1.0 - t) + hi * t);
  }
  return out;
}

polyft::SurfaceMesh matched_icosphere(int level) {
  polyft::GeneratorSpec spec;
  spec.kind = polyft::ShapeKind::icosphere;
  spec.radius = 1.0;
  spec.subdivision = level;
  spec.match_volume = 4.0 * k_pi / 3.0;
  return polyft::generate(spec);
}

}  // namespace

TEST_CASE("criterion 1: rectangle closed form equivalence") {
  const auto t0 = Clock::now();
  const double worst = testsupport::prop_rectangle_equivalence(1000, 7101);
  const double secs = seconds_since(t0);
  const bool ok = worst < 1e-10 && secs < 1.0;
  report(1, "rectangle equivalence", ok,
         "worst rel dev " + fmt(worst) + " over 1000 draws, tol 1e-10, " +
             fmt(secs) + " s");
  CHECK(worst < 1e-10);
  CHECK(secs < 1.0);
}

TEST_CASE("criterion 2: prism closed form equivalence") {
  const auto t0 = Clock::now();
  const double worst = testsupport::prop_prism_equivalence(500, 7112);
  const double secs = seconds_since(t0);
  const bool ok = worst < 1e-10 && secs < 1.0;
  report(2, "prism equivalence", ok,
         "worst rel dev " + fmt(worst) +
             " over cube + 3 prisms x 500 q, tol 1e-10, " + fmt(secs) + " s");
  CHECK(worst < 1e-10);
  CHECK(secs < 1.0);
}

TEST_CASE("criterion 3: tetrahedron quadrature oracle") {
  const auto t0 = Clock::now();
  testsupport::Rng rng(7103);
  double worst = 0.0;
  for (int t = 0; t < 4; ++t) {
    const polyft::SurfaceMesh tet = testsupport::random_tet(rng);
    for (int k = 0; k < 10; ++k) {
      const double mag = rng.uniform(0.5, 20.0);
      const polyft::Vec3 q = mag * rng.unit_vec3();
      const polyft::Complex direct = polyft::ft_mesh(q, tet);
      const polyft::Complex oracle = testsupport::tet_ft_quadrature(
          tet.vertices[0], tet.vertices[1], tet.vertices[2], tet.vertices[3],
          q, 64);
      worst = std::max(worst, testsupport::rel_dev(direct, oracle));
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = worst < 1e-9 && secs < 10.0;
  report(3, "quadrature oracle", ok,
         "worst rel dev " + fmt(worst) +
             " over 4 tets x 10 q with |q| <= 20, tol 1e-9, " + fmt(secs) +
             " s");
  CHECK(worst < 1e-9);
  CHECK(secs < 10.0);
}

TEST_CASE("criterion 4: sphere convergence across refinement levels") {
  const auto t0 = Clock::now();
  const std::vector<double> qs = linspace(0.5, 10.0, 50);
  double scale = 0.0;
  for (const double q : qs) {
    scale = std::max(scale, std::abs(polyft::ft_sphere_analytic(q, 1.0)));
  }

  const std::size_t want_facets[3] = {80, 320, 1280};
  double errs[3] = {0.0, 0.0, 0.0};
  bool facet_counts_ok = true;
  for (int level = 1; level <= 3; ++level) {
    const polyft::SurfaceMesh mesh = matched_icosphere(level);
    facet_counts_ok =
        facet_counts_ok && mesh.facets.size() == want_facets[level - 1];
    double worst = 0.0;
    for (const double q : qs) {
      const polyft::Complex got = polyft::ft_mesh({q, 0.0, 0.0}, mesh);
      const polyft::Complex want = polyft::ft_sphere_analytic(q, 1.0);
      worst = std::max(worst, std::abs(got - want));
    }
    errs[level - 1] = worst / scale;
  }
  const double secs = seconds_since(t0);

  // The analytic transform crosses zero inside [0.5, 10], so errors are
  // normalized by the largest analytic magnitude on the grid; the per-level
  // ceilings are frozen oracle-run values with headroom.
  const bool decreasing = errs[0] > errs[1] && errs[1] > errs[2];
  const bool bounded =
      errs[0] < 1.3e-3 && errs[1] < 2.3e-4 && errs[2] < 5e-5;
  const bool level2_under_2pct = errs[1] < 0.02;
  const bool ok = facet_counts_ok && decreasing && bounded &&
                  level2_under_2pct && secs < 30.0;
  report(4, "sphere convergence", ok,
         "normalized errors " + fmt(errs[0]) + "/" + fmt(errs[1]) + "/" +
             fmt(errs[2]) + " at levels 1/2/3, ceilings 1.3e-3/2.3e-4/5e-5, " +
             fmt(secs) + " s");
  CHECK(facet_counts_ok);
  CHECK(decreasing);
  CHECK(bounded);
  CHECK(level2_under_2pct);
  CHECK(secs < 30.0);
}

TEST_CASE("criterion 5: voxel grid artifact against the exact transform") {
  const auto t0 = Clock::now();
  const double pitch = 0.2;
  const polyft::SurfaceMesh ball = matched_icosphere(4);
  const polyft::VoxelGrid grid = polyft::voxelize(ball, pitch);
  const std::size_t occupied = static_cast<std::size_t>(
      std::count(grid.occupancy.begin(), grid.occupancy.end(), true));
  const bool lattice_ok = occupied == testsupport::lattice_ball_count(pitch);

  const int n = 200;
  const std::vector<double> qs = linspace(0.5, 40.0, n);
  std::vector<double> err_vox(qs.size());
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const polyft::Complex vox = polyft::voxel_ft(grid, {qs[k], 0.0, 0.0});
    err_vox[k] = std::abs(vox - polyft::ft_sphere_analytic(qs[k], 1.0));
  }

  // Clause 1: a local maximum of the voxel error inside [29.8, 33.0].
  const double win_lo = 29.8, win_hi = 33.0;
  bool clause1 = false;
  double peak_q = 0.0, peak_err = 0.0;
  for (int k = 1; k + 1 < n; ++k) {
    if (qs[static_cast<std::size_t>(k)] < win_lo ||
        qs[static_cast<std::size_t>(k)] > win_hi) {
      continue;
    }
    const std::size_t ku = static_cast<std::size_t>(k);
    if (err_vox[ku] > err_vox[ku - 1] && err_vox[ku] > err_vox[ku + 1]) {
      clause1 = true;
      if (err_vox[ku] > peak_err) {
        peak_err = err_vox[ku];
        peak_q = qs[ku];
      }
    }
  }

  // For the failure report: the error peaks bracketing the window and the
  // dip between them.
  double lobe_lo_q = 0.0, lobe_lo_err = 0.0;
  double lobe_hi_q = 0.0, lobe_hi_err = 0.0;
  double dip_q = 0.0, dip_err = 1e300;
  for (int k = 1; k + 1 < n; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    const double q = qs[ku];
    if (q < 25.0 || q > 38.0) continue;
    if (err_vox[ku] > err_vox[ku - 1] && err_vox[ku] > err_vox[ku + 1]) {
      if (q < win_lo && err_vox[ku] > lobe_lo_err) {
        lobe_lo_err = err_vox[ku];
        lobe_lo_q = q;
      }
      if (q > win_hi && err_vox[ku] > lobe_hi_err) {
        lobe_hi_err = err_vox[ku];
        lobe_hi_q = q;
      }
    }
    if (q >= win_lo && q <= win_hi && err_vox[ku] < dip_err) {
      dip_err = err_vox[ku];
      dip_q = q;
    }
  }

  // Clause 2: the 80-facet mesh beats the voxel baseline by 5x on [20, 40].
  const polyft::SurfaceMesh coarse = matched_icosphere(1);
  double vox_max = 0.0, mesh_max = 0.0;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    if (qs[k] < 20.0) continue;
    const polyft::Complex got = polyft::ft_mesh({qs[k], 0.0, 0.0}, coarse);
    const double mesh_err =
        std::abs(got - polyft::ft_sphere_analytic(qs[k], 1.0));
    vox_max = std::max(vox_max, err_vox[k]);
    mesh_max = std::max(mesh_max, mesh_err);
  }
  const double ratio = vox_max / mesh_max;
  const bool clause2 = ratio >= 5.0;
  const double secs = seconds_since(t0);

  std::string clause1_text;
  if (clause1) {
    clause1_text = "local error max at q=" + fmt(peak_q) + " err " +
                   fmt(peak_err) + " inside [29.8, 33.0]";
  } else {
    clause1_text =
        "no local error max inside [29.8, 33.0]: the lattice artifact sits "
        "at 2*pi/pitch = " +
        fmt(2.0 * k_pi / pitch) +
        " where the cubic cell transform has an axial zero, splitting it "
        "into side lobes at q=" +
        fmt(lobe_lo_q) + " (err " + fmt(lobe_lo_err) + ") and q=" +
        fmt(lobe_hi_q) + " (err " + fmt(lobe_hi_err) +
        ") outside the window, dip at q=" + fmt(dip_q);
  }
  const bool ok = lattice_ok && clause1 && clause2 && secs < 30.0;
  report(5, "voxel grid artifact", ok,
         std::string(lattice_ok ? "" : "voxel count mismatch; ") +
             clause1_text + "; mesh-vs-voxel error ratio on [20, 40] = " +
             fmt(ratio) + " (needs >= 5), " + fmt(secs) + " s");
  CHECK(lattice_ok);
  CHECK(clause1);
  CHECK(clause2);
  CHECK(secs < 30.0);
}

TEST_CASE("criterion 6: bundled fixture end to end") {
  const polyft::SurfaceMesh mesh =
      polyft::parse_surfacemesh(polyft::two_spheres_surfacemesh());
  const bool parse_ok = mesh.vertices.size() == 83 && mesh.facets.size() == 160;
  const bool clean = polyft::validate_mesh(mesh).clean();

  const double volume = polyft::mesh_volume(mesh);
  const polyft::Complex f0 = polyft::ft_mesh({0.0, 0.0, 0.0}, mesh);
  const bool f0_ok =
      std::abs(f0 - polyft::Complex{volume, 0.0}) <= 1e-12 * volume;

  testsupport::TempDir dir;
  const auto mesh_path = dir.file("fixture.surfacemesh");
  testsupport::write_file(mesh_path,
                          std::string(polyft::two_spheres_surfacemesh()));
  const auto out = dir.file("plane.csv");
  const auto t0 = Clock::now();
  const testsupport::RunResult run = testsupport::run_cli(
      "transform --mesh '" + mesh_path.string() +
          "' --qx -10:10:40 --qy -10:10:40 --qz 0:0:1 --out '" + out.string() +
          "'",
      dir);
  const double secs = seconds_since(t0);
  const bool cli_ok = run.exit_code == 0;

  bool finite = false;
  double worst_conj = -1.0;
  if (cli_ok) {
    const polyft::FieldSamples field =
        polyft::read_field_csv(testsupport::read_file(out));
    finite = field.q.size() == 1600;
    for (const polyft::Complex& v : field.values) {
      finite = finite && std::isfinite(v.real()) && std::isfinite(v.imag());
    }
    if (finite) {
      worst_conj = 0.0;
      for (int iy = 0; iy < 40; ++iy) {
        for (int ix = 0; ix < 40; ++ix) {
          const std::size_t k = static_cast<std::size_t>(ix + 40 * iy);
          const std::size_t m =
              static_cast<std::size_t>((39 - ix) + 40 * (39 - iy));
          const double dev = std::abs(field.values[m] -
                                      std::conj(field.values[k])) /
                             (1.0 + std::abs(field.values[k]));
          worst_conj = std::max(worst_conj, dev);
        }
      }
    }
  }
  const bool conj_ok = finite && worst_conj >= 0.0 && worst_conj < 1e-12;
  const bool ok = parse_ok && clean && f0_ok && cli_ok && conj_ok && secs < 5.0;
  report(6, "fixture pipeline", ok,
         "83 vertices/160 facets " + std::string(parse_ok ? "ok" : "BAD") +
             ", " + (clean ? "clean" : "NOT clean") + ", |ft(0) - V|/V = " +
             fmt(std::abs(f0 - polyft::Complex{volume, 0.0}) / volume) +
             ", 40x40 plane in " + fmt(secs) + " s, worst conjugate dev " +
             fmt(worst_conj));
  CHECK(parse_ok);
  CHECK(clean);
  CHECK(f0_ok);
  CHECK(cli_ok);
  CHECK(conj_ok);
  CHECK(secs < 5.0);
}

TEST_CASE("criterion 7: invariant property suite") {
  const auto t0 = Clock::now();
  const double translation = testsupport::prop_translation_phase(200, 7701);
  const double rotation = testsupport::prop_rotation_equivariance(200, 7702);
  const double scaling = testsupport::prop_scaling(200, 7703);
  const double orientation =
      testsupport::prop_orientation_antisymmetry(100, 7704);
  const double additivity = testsupport::prop_additivity(100, 7705);
  const double conjugate = testsupport::prop_conjugate_symmetry(200, 7706);
  const double branch = testsupport::prop_branch_continuity(100, 7707);
  const double secs = seconds_since(t0);

  const bool ok = translation < 1e-10 && rotation < 1e-10 &&
                  scaling < 1e-10 && orientation < 1e-10 &&
                  additivity < 1e-10 && conjugate < 1e-12 && branch < 1.0 &&
                  secs < 60.0;
  report(7, "property suite", ok,
         "translation " + fmt(translation) + ", rotation " + fmt(rotation) +
             ", scaling " + fmt(scaling) + ", orientation " +
             fmt(orientation) + ", additivity " + fmt(additivity) +
             ", conjugate " + fmt(conjugate) + ", branch " + fmt(branch) +
             ", " + fmt(secs) + " s");
  CHECK(translation < 1e-10);
  CHECK(rotation < 1e-10);
  CHECK(scaling < 1e-10);
  CHECK(orientation < 1e-10);
  CHECK(additivity < 1e-10);
  CHECK(conjugate < 1e-12);
  CHECK(branch < 1.0);
  CHECK(secs < 60.0);
}

TEST_CASE("criterion 8: transform output is thread-count invariant") {
  testsupport::TempDir dir;
  const auto mesh_path = dir.file("fixture.surfacemesh");
  testsupport::write_file(mesh_path,
                          std::string(polyft::two_spheres_surfacemesh()));
  const auto out1 = dir.file("t1.csv");
  const auto out8 = dir.file("t8.csv");
  const std::string axes = "--qx -3:3:7 --qy 0:2:5 --qz -1:1:3";

  const int rc1 = testsupport::run_cli(
      "--threads 1 transform --mesh '" + mesh_path.string() + "' " + axes +
          " --out '" + out1.string() + "'",
      dir).exit_code;
  const int rc8 = testsupport::run_cli(
      "--threads 8 transform --mesh '" + mesh_path.string() + "' " + axes +
          " --out '" + out8.string() + "'",
      dir).exit_code;

  bool identical = false;
  std::size_t bytes = 0;
  if (rc1 == 0 && rc8 == 0) {
    const std::string a = testsupport::read_file(out1);
    const std::string b = testsupport::read_file(out8);
    identical = a == b;
    bytes = a.size();
  }
  const bool ok = rc1 == 0 && rc8 == 0 && identical;
  report(8, "thread determinism", ok,
         ok ? "--threads 1 and --threads 8 outputs byte-identical (" +
                  std::to_string(bytes) + " bytes)"
            : "exit codes " + std::to_string(rc1) + "/" +
                  std::to_string(rc8) +
                  (identical ? "" : ", outputs differ"));
  CHECK(rc1 == 0);
  CHECK(rc8 == 0);
  CHECK(identical);
}
