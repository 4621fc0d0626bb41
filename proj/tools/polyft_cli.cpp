// polyft command-line tool: exact Fourier transforms of constant densities
// over polyhedral meshes, analytic references, and a voxel-grid baseline.
//
// Exit codes: 0 success, 2 usage error, 3 input-data error (parse or
// validation), 4 numeric error during evaluation.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyft/polyft.hpp"

namespace {

constexpr int k_exit_usage = 2;
constexpr int k_exit_input = 3;
constexpr int k_exit_numeric = 4;

double parse_strict_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    throw CLI::ValidationError(what, "'" + text + "' is not a number");
  }
  return v;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    if (end == std::string::npos) {
      out.push_back(text.substr(begin));
      return out;
    }
    out.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
}

// START:STOP:COUNT with inclusive endpoints; COUNT=1 collapses to START.
polyft::AxisSpec parse_axis(const std::string& text, const std::string& flag) {
  const auto parts = split_on(text, ':');
  if (parts.size() != 3) {
    throw CLI::ValidationError(flag, "expected START:STOP:COUNT, got '" +
                                         text + "'");
  }
  polyft::AxisSpec axis;
  axis.start = parse_strict_double(parts[0], flag);
  axis.stop = parse_strict_double(parts[1], flag);
  long long count = 0;
  const auto res = std::from_chars(parts[2].data(),
                                   parts[2].data() + parts[2].size(), count);
  if (res.ec != std::errc() ||
      res.ptr != parts[2].data() + parts[2].size() || count < 1 ||
      count > 100000000) {
    throw CLI::ValidationError(flag, "'" + parts[2] +
                                         "' is not a valid point count");
  }
  if (count > 1 && axis.start > axis.stop) {
    throw CLI::ValidationError(flag, "START must be <= STOP when COUNT > 1");
  }
  axis.count = static_cast<int>(count);
  return axis;
}

std::vector<double> parse_dims(const std::string& text,
                               const std::string& flag, std::size_t want) {
  const auto parts = split_on(text, ',');
  if (parts.size() != want) {
    throw CLI::ValidationError(
        flag, "expected " + std::to_string(want) + " comma-separated value" +
                  (want == 1 ? "" : "s") + ", got '" + text + "'");
  }
  std::vector<double> out;
  out.reserve(parts.size());
  for (const std::string& p : parts) {
    out.push_back(parse_strict_double(p, flag));
  }
  return out;
}

polyft::SurfaceMesh load_mesh(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw polyft::Error("cannot open mesh file '" + path + "'");
  }
  return polyft::parse_surfacemesh(in);
}

polyft::FieldSamples load_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw polyft::Error("cannot open field file '" + path + "'");
  }
  return polyft::read_field_csv(in);
}

// Transform inputs are rejected up front so structural problems surface as
// input-data errors, leaving only genuinely numeric failures to evaluation.
void require_transformable(const polyft::SurfaceMesh& mesh) {
  polyft::require_watertight(mesh);
  for (const polyft::Facet& facet : mesh.facets) {
    polyft::facet_normal(mesh, facet);
  }
}

// Deletes the file unless commit() ran, so failed runs leave no partial
// output behind.
class OutputFile {
 public:
  explicit OutputFile(const std::string& path)
      : path_(path), stream_(path, std::ios::binary) {
    if (!stream_) {
      throw CLI::ValidationError("--out", "cannot open '" + path +
                                              "' for writing");
    }
  }

  ~OutputFile() {
    if (!committed_) {
      stream_.close();
      std::error_code ec;
      std::filesystem::remove(path_, ec);
    }
  }

  std::ostream& stream() { return stream_; }

  void commit() {
    stream_.flush();
    if (!stream_) {
      throw polyft::Error("failed writing '" + path_.string() + "'");
    }
    committed_ = true;
    stream_.close();
  }

 private:
  std::filesystem::path path_;
  std::ofstream stream_;
  bool committed_ = false;
};

struct AxisFlags {
  std::string qx = "0:0:1";
  std::string qy = "0:0:1";
  std::string qz = "0:0:1";

  void attach(CLI::App* cmd) {
    cmd->add_option("--qx", qx, "x axis as START:STOP:COUNT")
        ->capture_default_str();
    cmd->add_option("--qy", qy, "y axis as START:STOP:COUNT")
        ->capture_default_str();
    cmd->add_option("--qz", qz, "z axis as START:STOP:COUNT")
        ->capture_default_str();
  }

  polyft::QGrid grid() const {
    return {parse_axis(qx, "--qx"), parse_axis(qy, "--qy"),
            parse_axis(qz, "--qz")};
  }
};

void write_field(const polyft::FTField& field, const std::string& path) {
  OutputFile out(path);
  polyft::write_field_csv(field, out.stream());
  out.commit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fourier transforms of constant densities over "
               "polygonal meshes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("polyft ") + polyft::k_version);

  int threads = 0;
  app.add_option("--threads", threads,
                 "worker thread count (default: all cores)")
      ->check(CLI::PositiveNumber);

  // transform
  auto* transform = app.add_subcommand(
      "transform", "Fourier transform of a mesh over a q grid");
  std::string transform_mesh, transform_out;
  AxisFlags transform_axes;
  transform->add_option("--mesh", transform_mesh, "surfacemesh input file")
      ->required();
  transform_axes.attach(transform);
  transform->add_option("--out", transform_out, "output CSV file")->required();

  // analytic
  auto* analytic = app.add_subcommand(
      "analytic", "closed-form transform of a sphere or prism");
  std::string analytic_shape, analytic_dims, analytic_out;
  double analytic_radius = 1.0;
  AxisFlags analytic_axes;
  analytic->add_option("--shape", analytic_shape, "sphere or prism")
      ->required()
      ->check(CLI::IsMember({"sphere", "prism"}));
  analytic->add_option("--radius", analytic_radius, "sphere radius");
  analytic->add_option("--dims", analytic_dims, "prism edges as a,b,c");
  analytic_axes.attach(analytic);
  analytic->add_option("--out", analytic_out, "output CSV file")->required();

  // voxelize
  auto* voxelize_cmd = app.add_subcommand(
      "voxelize", "occupancy grid of a mesh at a given pitch");
  std::string voxelize_mesh, voxelize_out;
  double voxelize_pitch = 0.0;
  voxelize_cmd->add_option("--mesh", voxelize_mesh, "surfacemesh input file")
      ->required();
  voxelize_cmd->add_option("--pitch", voxelize_pitch, "cubic cell edge")
      ->required()
      ->check(CLI::PositiveNumber);
  voxelize_cmd
      ->add_option("--out-occupancy", voxelize_out,
                   "output text file of occupied ix iy iz triples")
      ->required();

  // voxel-transform
  auto* voxel_transform = app.add_subcommand(
      "voxel-transform", "transform of the voxelized mesh over a q grid");
  std::string voxel_transform_mesh, voxel_transform_out;
  double voxel_transform_pitch = 0.0;
  AxisFlags voxel_transform_axes;
  voxel_transform
      ->add_option("--mesh", voxel_transform_mesh, "surfacemesh input file")
      ->required();
  voxel_transform
      ->add_option("--pitch", voxel_transform_pitch, "cubic cell edge")
      ->required()
      ->check(CLI::PositiveNumber);
  voxel_transform_axes.attach(voxel_transform);
  voxel_transform->add_option("--out", voxel_transform_out, "output CSV file")
      ->required();

  // compare
  auto* compare = app.add_subcommand(
      "compare", "error metrics between two field CSV files");
  std::string compare_a, compare_b;
  compare->add_option("--a", compare_a, "reference field CSV")->required();
  compare->add_option("--b", compare_b, "comparison field CSV")->required();

  // generate
  auto* generate_cmd =
      app.add_subcommand("generate", "write a canonical test mesh");
  std::string generate_shape, generate_dims, generate_out;
  double generate_radius = 1.0;
  int generate_subdiv = 0;
  std::optional<double> generate_match_volume;
  generate_cmd
      ->add_option("--shape", generate_shape,
                   "cube, prism, icosphere, or uvsphere")
      ->required()
      ->check(CLI::IsMember({"cube", "prism", "icosphere", "uvsphere"}));
  generate_cmd->add_option("--dims", generate_dims,
                           "cube edge A or prism edges a,b,c");
  generate_cmd->add_option("--radius", generate_radius, "sphere radius");
  generate_cmd->add_option("--subdiv", generate_subdiv,
                           "sphere subdivision level");
  generate_cmd->add_option("--match-volume", generate_match_volume,
                           "rescale the mesh to enclose exactly this volume");
  generate_cmd->add_option("--out", generate_out, "output surfacemesh file")
      ->required();

  // validate
  auto* validate_cmd = app.add_subcommand(
      "validate", "structural checks; exit 0 iff the mesh is clean");
  std::string validate_mesh_path;
  validate_cmd->add_option("--mesh", validate_mesh_path, "surfacemesh input file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return k_exit_usage;
  }

  try {
    if (*transform) {
      const polyft::QGrid grid = transform_axes.grid();
      const polyft::SurfaceMesh mesh = load_mesh(transform_mesh);
      require_transformable(mesh);
      const polyft::FTField field = polyft::evaluate_field(
          [&mesh](polyft::Vec3 q) { return polyft::ft_mesh(q, mesh); }, grid,
          threads);
      write_field(field, transform_out);
    } else if (*analytic) {
      const polyft::QGrid grid = analytic_axes.grid();
      polyft::FTField field;
      if (analytic_shape == "sphere") {
        if (!(analytic_radius > 0.0)) {
          throw polyft::InvalidSpec("sphere radius must be positive");
        }
        const double radius = analytic_radius;
        field = polyft::evaluate_field(
            [radius](polyft::Vec3 q) {
              return polyft::ft_sphere_analytic(polyft::norm(q), radius);
            },
            grid, threads);
      } else {
        const auto dims = parse_dims(analytic_dims, "--dims", 3);
        if (!(dims[0] > 0.0) || !(dims[1] > 0.0) || !(dims[2] > 0.0)) {
          throw polyft::InvalidSpec("prism dimensions must be positive");
        }
        field = polyft::evaluate_field(
            [&dims](polyft::Vec3 q) {
              return polyft::ft_prism(q, dims[0], dims[1], dims[2]);
            },
            grid, threads);
      }
      write_field(field, analytic_out);
    } else if (*voxelize_cmd) {
      const polyft::SurfaceMesh mesh = load_mesh(voxelize_mesh);
      const polyft::VoxelGrid grid = polyft::voxelize(mesh, voxelize_pitch);
      OutputFile out(voxelize_out);
      polyft::write_occupancy(grid, out.stream());
      out.commit();
    } else if (*voxel_transform) {
      const polyft::QGrid qgrid = voxel_transform_axes.grid();
      const polyft::SurfaceMesh mesh = load_mesh(voxel_transform_mesh);
      const polyft::VoxelGrid vgrid =
          polyft::voxelize(mesh, voxel_transform_pitch);
      const polyft::FTField field = polyft::evaluate_field(
          [&vgrid](polyft::Vec3 q) { return polyft::voxel_ft(vgrid, q); },
          qgrid, threads);
      write_field(field, voxel_transform_out);
    } else if (*compare) {
      const polyft::FieldSamples a = load_field(compare_a);
      const polyft::FieldSamples b = load_field(compare_b);
      std::cout << polyft::compare_fields(a, b).to_string();
    } else if (*generate_cmd) {
      polyft::GeneratorSpec spec;
      if (generate_shape == "cube") {
        spec.kind = polyft::ShapeKind::cube;
        if (!generate_dims.empty()) {
          spec.a = parse_dims(generate_dims, "--dims", 1)[0];
        }
      } else if (generate_shape == "prism") {
        spec.kind = polyft::ShapeKind::prism;
        if (!generate_dims.empty()) {
          const auto dims = parse_dims(generate_dims, "--dims", 3);
          spec.a = dims[0];
          spec.b = dims[1];
          spec.c = dims[2];
        }
      } else if (generate_shape == "icosphere") {
        spec.kind = polyft::ShapeKind::icosphere;
      } else {
        spec.kind = polyft::ShapeKind::uvsphere;
      }
      spec.radius = generate_radius;
      spec.subdivision = generate_subdiv;
      spec.match_volume = generate_match_volume;
      const polyft::SurfaceMesh mesh = polyft::generate(spec);
      OutputFile out(generate_out);
      polyft::write_surfacemesh(mesh, out.stream());
      out.commit();
    } else if (*validate_cmd) {
      const polyft::SurfaceMesh mesh = load_mesh(validate_mesh_path);
      const polyft::ValidationReport report = polyft::validate_mesh(mesh);
      std::cout << report.summary();
      if (!report.clean()) return k_exit_input;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_usage;
  } catch (const polyft::InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_usage;
  } catch (const polyft::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_numeric;
  } catch (const polyft::EvaluationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_numeric;
  } catch (const polyft::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_input;
  }
  return 0;
}
