#pragma once

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polyft/error.hpp"
#include "polyft/field.hpp"
#include "polyft/format.hpp"
#include "polyft/mesh.hpp"

// Text formats.
//
// surfacemesh:
//   surfacemesh
//   <point count>
//   <x> <y> <z>          (point count lines)
//   <element count>
//   <i> <j> <k>          (element count lines, one-based vertex indices)
// Fields are separated by runs of spaces or tabs; blank lines are skipped
// anywhere; anything else is an error with a line number attached.
//
// field CSV:
//   Qx,Qy,Qz,re,im,abs
// followed by one comma-separated row per grid point in linear index
// order (Qx fastest). Numbers are written in their shortest form that
// parses back to the identical double.

namespace polyft {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line,
                                                  std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && seps.find(line[i]) != std::string_view::npos) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && seps.find(line[j]) == std::string_view::npos) {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline double parse_double_field(std::string_view field, int line) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size() ||
      !std::isfinite(v)) {
    throw MalformedNumber(line, "malformed number '" + std::string(field) + "'");
  }
  return v;
}

inline long long parse_int_field(std::string_view field, int line) {
  long long v = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw MalformedNumber(line, "malformed integer '" + std::string(field) + "'");
  }
  return v;
}

// Feeds non-blank lines one at a time, tracking 1-based line numbers.
class LineSource {
 public:
  explicit LineSource(std::istream& in) : in_(in) {}

  // Returns false at end of input. Skips blank (all-separator) lines.
  bool next(std::vector<std::string_view>& fields) {
    while (std::getline(in_, line_)) {
      ++number_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      fields = split_fields(line_, " \t");
      if (!fields.empty()) return true;
    }
    ++number_;
    return false;
  }

  int number() const { return number_; }

 private:
  std::istream& in_;
  std::string line_;
  int number_ = 0;
};

}  // namespace detail

inline SurfaceMesh parse_surfacemesh(std::istream& in) {
  detail::LineSource src(in);
  std::vector<std::string_view> fields;

  if (!src.next(fields)) {
    throw BadHeader(src.number(), "missing 'surfacemesh' header");
  }
  if (fields.size() != 1 || fields[0] != "surfacemesh") {
    throw BadHeader(src.number(), "expected 'surfacemesh' header");
  }

  auto read_count = [&](const char* what) -> long long {
    if (!src.next(fields)) {
      throw CountMismatch(src.number(),
                          std::string("missing ") + what + " count");
    }
    if (fields.size() != 1) {
      throw MalformedNumber(src.number(),
                            std::string("expected a single ") + what + " count");
    }
    const long long n = detail::parse_int_field(fields[0], src.number());
    if (n < 0) {
      throw MalformedNumber(src.number(),
                            std::string("negative ") + what + " count");
    }
    return n;
  };

  SurfaceMesh mesh;
  const long long n_points = read_count("point");
  mesh.vertices.reserve(static_cast<std::size_t>(n_points));
  for (long long i = 0; i < n_points; ++i) {
    if (!src.next(fields)) {
      throw CountMismatch(src.number(),
                          "expected " + std::to_string(n_points) +
                              " point lines, got " + std::to_string(i));
    }
    if (fields.size() != 3) {
      throw MalformedNumber(src.number(), "expected 3 coordinates, got " +
                                              std::to_string(fields.size()));
    }
    mesh.vertices.push_back({detail::parse_double_field(fields[0], src.number()),
                             detail::parse_double_field(fields[1], src.number()),
                             detail::parse_double_field(fields[2], src.number())});
  }

  const long long n_elements = read_count("element");
  mesh.facets.reserve(static_cast<std::size_t>(n_elements));
  for (long long i = 0; i < n_elements; ++i) {
    if (!src.next(fields)) {
      throw CountMismatch(src.number(),
                          "expected " + std::to_string(n_elements) +
                              " element lines, got " + std::to_string(i));
    }
    if (fields.size() != 3) {
      throw MalformedNumber(src.number(), "expected 3 vertex indices, got " +
                                              std::to_string(fields.size()));
    }
    Facet facet;
    facet.indices.reserve(3);
    for (const std::string_view f : fields) {
      const long long one_based = detail::parse_int_field(f, src.number());
      if (one_based < 1 || one_based > n_points) {
        throw IndexOutOfRange(src.number(),
                              "vertex index " + std::to_string(one_based) +
                                  " outside [1, " + std::to_string(n_points) +
                                  "]");
      }
      facet.indices.push_back(static_cast<int>(one_based - 1));
    }
    mesh.facets.push_back(std::move(facet));
  }

  if (src.next(fields)) {
    throw CountMismatch(src.number(), "trailing content after last element");
  }
  return mesh;
}

inline SurfaceMesh parse_surfacemesh(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_surfacemesh(in);
}

// The text format stores triangles only; vertex order and unreferenced
// vertices are preserved, and coordinates round-trip bit-exactly.
inline void write_surfacemesh(const SurfaceMesh& mesh, std::ostream& out) {
  for (std::size_t f = 0; f < mesh.facets.size(); ++f) {
    if (mesh.facets[f].indices.size() != 3) {
      throw InvalidSpec("surfacemesh format stores triangles; facet " +
                        std::to_string(f) + " has " +
                        std::to_string(mesh.facets[f].indices.size()) +
                        " vertices");
    }
  }
  out << "surfacemesh\n" << mesh.vertices.size() << "\n";
  for (const Vec3& v : mesh.vertices) {
    out << detail::format_double(v.x) << ' ' << detail::format_double(v.y)
        << ' ' << detail::format_double(v.z) << '\n';
  }
  out << mesh.facets.size() << "\n";
  for (const Facet& facet : mesh.facets) {
    out << facet.indices[0] + 1 << ' ' << facet.indices[1] + 1 << ' '
        << facet.indices[2] + 1 << '\n';
  }
}

inline std::string write_surfacemesh(const SurfaceMesh& mesh) {
  std::ostringstream out;
  write_surfacemesh(mesh, out);
  return out.str();
}

inline constexpr std::string_view k_field_csv_header = "Qx,Qy,Qz,re,im,abs";

inline void write_field_csv(const FTField& field, std::ostream& out) {
  out << k_field_csv_header << '\n';
  const std::size_t n = field.grid.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3 q = field.grid.point(k);
    const Complex v = field.values[k];
    out << detail::format_double(q.x) << ',' << detail::format_double(q.y)
        << ',' << detail::format_double(q.z) << ','
        << detail::format_double(v.real()) << ','
        << detail::format_double(v.imag()) << ','
        << detail::format_double(std::abs(v)) << '\n';
  }
}

// Reads rows back as flat samples; the derived abs column is ignored.
inline FieldSamples read_field_csv(std::istream& in) {
  detail::LineSource src(in);
  std::vector<std::string_view> fields;
  if (!src.next(fields)) {
    throw BadHeader(src.number(), "missing CSV header");
  }
  if (fields.size() != 1 || fields[0] != k_field_csv_header) {
    throw BadHeader(src.number(), "expected CSV header '" +
                                      std::string(k_field_csv_header) + "'");
  }
  FieldSamples samples;
  while (src.next(fields)) {
    // Re-split the single whitespace-free token on commas.
    if (fields.size() != 1) {
      throw MalformedNumber(src.number(), "unexpected whitespace in CSV row");
    }
    const auto cols = detail::split_fields(fields[0], ",");
    if (cols.size() != 6) {
      throw MalformedNumber(src.number(), "expected 6 columns, got " +
                                              std::to_string(cols.size()));
    }
    samples.q.push_back({detail::parse_double_field(cols[0], src.number()),
                         detail::parse_double_field(cols[1], src.number()),
                         detail::parse_double_field(cols[2], src.number())});
    samples.values.emplace_back(
        detail::parse_double_field(cols[3], src.number()),
        detail::parse_double_field(cols[4], src.number()));
    detail::parse_double_field(cols[5], src.number());
  }
  return samples;
}

inline FieldSamples read_field_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_field_csv(in);
}

}  // namespace polyft
