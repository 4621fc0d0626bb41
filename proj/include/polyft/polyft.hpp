#pragma once

// Umbrella header: exact Fourier transforms of constant densities over
// polygons and polyhedral volumes, plus mesh IO, shape generators, a
// voxel-grid reference path, and parallel grid evaluation.

#include "polyft/error.hpp"
#include "polyft/field.hpp"
#include "polyft/fixtures.hpp"
#include "polyft/ft.hpp"
#include "polyft/generate.hpp"
#include "polyft/mesh.hpp"
#include "polyft/mesh_io.hpp"
#include "polyft/polygon.hpp"
#include "polyft/vec.hpp"
#include "polyft/voxel.hpp"

namespace polyft {

inline constexpr const char* k_version = "0.1.0";

}  // namespace polyft
