#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "polyft/error.hpp"
#include "polyft/format.hpp"
#include "polyft/vec.hpp"

namespace polyft {

// One sampling axis: count points from start to stop inclusive. The
// endpoints are reproduced exactly; interior points are the linear
// interpolation start*(1-t) + stop*t with t = i/(count-1), so a mirrored
// axis (-A..A) yields values symmetric to within an ulp or two.
struct AxisSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  double value(int i) const {
    if (count <= 1) return start;
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    return start * (1.0 - t) + stop * t;
  }
};

// Cartesian product of three axes; linear index k = ix + nx*(iy + ny*iz),
// x fastest.
struct QGrid {
  AxisSpec x;
  AxisSpec y;
  AxisSpec z;

  std::size_t size() const {
    return static_cast<std::size_t>(x.count) *
           static_cast<std::size_t>(y.count) *
           static_cast<std::size_t>(z.count);
  }

  Vec3 point(std::size_t k) const {
    const std::size_t nx = static_cast<std::size_t>(x.count);
    const std::size_t ny = static_cast<std::size_t>(y.count);
    const std::size_t ix = k % nx;
    const std::size_t iy = (k / nx) % ny;
    const std::size_t iz = k / (nx * ny);
    return {x.value(static_cast<int>(ix)), y.value(static_cast<int>(iy)),
            z.value(static_cast<int>(iz))};
  }
};

inline bool operator==(const AxisSpec& a, const AxisSpec& b) {
  return a.start == b.start && a.stop == b.stop && a.count == b.count;
}

inline bool operator==(const QGrid& a, const QGrid& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

// Transform values sampled over a grid, in linear index order.
struct FTField {
  QGrid grid;
  std::vector<Complex> values;
};

// Flat (q, value) rows, the in-memory form of the CSV output. Compares by
// bitwise-equal q triples, so fields written and re-read round-trip.
struct FieldSamples {
  std::vector<Vec3> q;
  std::vector<Complex> values;
};

inline FieldSamples to_samples(const FTField& field) {
  FieldSamples s;
  const std::size_t n = field.grid.size();
  s.q.reserve(n);
  for (std::size_t k = 0; k < n; ++k) s.q.push_back(field.grid.point(k));
  s.values = field.values;
  return s;
}

// Evaluates backend(q) over every grid point. Work is split into
// contiguous index blocks across threads; each point's value depends only
// on its q, so the output is byte-identical for any thread count. threads
// <= 0 means one thread per hardware core.
//
// A backend exception or a non-finite value aborts the evaluation; the
// failure at the lowest grid index is rethrown as EvaluationError with the
// offending q attached, regardless of which worker hit it first.
inline FTField evaluate_field(const std::function<Complex(Vec3)>& backend,
                              const QGrid& grid, int threads = 0) {
  if (grid.x.count < 1 || grid.y.count < 1 || grid.z.count < 1) {
    throw InvalidSpec("axis count must be >= 1");
  }
  const std::size_t n = grid.size();
  FTField field{grid, std::vector<Complex>(n)};

  int nt = threads > 0
               ? threads
               : static_cast<int>(std::thread::hardware_concurrency());
  if (nt < 1) nt = 1;
  nt = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(nt), n));

  struct Failure {
    std::size_t index;
    std::exception_ptr error;
  };
  std::vector<std::optional<Failure>> failures(
      static_cast<std::size_t>(nt));

  auto run_block = [&](int w) {
    const std::size_t begin = n * static_cast<std::size_t>(w) /
                              static_cast<std::size_t>(nt);
    const std::size_t end = n * (static_cast<std::size_t>(w) + 1) /
                            static_cast<std::size_t>(nt);
    for (std::size_t k = begin; k < end; ++k) {
      const Vec3 q = grid.point(k);
      try {
        const Complex v = backend(q);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          throw NumericError("non-finite transform value");
        }
        field.values[k] = v;
      } catch (const std::exception& e) {
        const std::string msg = std::string(e.what()) + " at q=(" +
                                detail::format_double(q.x) + "," +
                                detail::format_double(q.y) + "," +
                                detail::format_double(q.z) + ")";
        failures[static_cast<std::size_t>(w)] =
            Failure{k, std::make_exception_ptr(EvaluationError(msg))};
        return;
      }
    }
  };

  if (nt == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(nt));
    for (int w = 0; w < nt; ++w) {
      workers.emplace_back(run_block, w);
    }
    for (std::thread& t : workers) t.join();
  }

  const std::optional<Failure>* first = nullptr;
  for (const auto& f : failures) {
    if (f && (!first || f->index < (*first)->index)) first = &f;
  }
  if (first) std::rethrow_exception((*first)->error);
  return field;
}

// Deviation metrics between two fields on identical grids; a is the
// reference for the relative metric.
struct FieldErrorReport {
  double max_abs = 0.0;
  double mean_abs = 0.0;
  double max_rel = 0.0;  // skips reference magnitudes below 1e-12
  Vec3 at_q{};           // q of the largest absolute deviation

  std::string to_string() const {
    return "max_abs=" + detail::format_double(max_abs) + "\n" +
           "mean_abs=" + detail::format_double(mean_abs) + "\n" +
           "max_rel=" + detail::format_double(max_rel) + "\n" +
           "at_q=" + detail::format_double(at_q.x) + "," +
           detail::format_double(at_q.y) + "," +
           detail::format_double(at_q.z) + "\n";
  }
};

inline FieldErrorReport compare_fields(const FieldSamples& a,
                                       const FieldSamples& b) {
  if (a.q.size() != b.q.size()) {
    throw GridMismatch("sample counts differ: " + std::to_string(a.q.size()) +
                       " vs " + std::to_string(b.q.size()));
  }
  for (std::size_t k = 0; k < a.q.size(); ++k) {
    if (a.q[k].x != b.q[k].x || a.q[k].y != b.q[k].y ||
        a.q[k].z != b.q[k].z) {
      throw GridMismatch("q grids differ at row " + std::to_string(k));
    }
  }
  FieldErrorReport report;
  if (a.q.empty()) return report;
  report.at_q = a.q.front();
  double sum_abs = 0.0;
  for (std::size_t k = 0; k < a.q.size(); ++k) {
    const double d = std::abs(a.values[k] - b.values[k]);
    sum_abs += d;
    if (d > report.max_abs) {
      report.max_abs = d;
      report.at_q = a.q[k];
    }
    const double ref = std::abs(a.values[k]);
    if (ref > 1e-12) {
      report.max_rel = std::max(report.max_rel, d / ref);
    }
  }
  report.mean_abs = sum_abs / static_cast<double>(a.q.size());
  return report;
}

inline FieldErrorReport compare_fields(const FTField& a, const FTField& b) {
  if (!(a.grid == b.grid)) {
    throw GridMismatch("grid axes differ");
  }
  return compare_fields(to_samples(a), to_samples(b));
}

}  // namespace polyft
