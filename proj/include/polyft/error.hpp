#pragma once

#include <stdexcept>
#include <string>

namespace polyft {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A segment endpoint pair closer than the degeneracy threshold (1e-14).
class DegenerateSegment : public Error {
 public:
  using Error::Error;
};

// A facet whose first three vertices are collinear, or with fewer than
// three distinct vertices.
class DegenerateFacet : public Error {
 public:
  using Error::Error;
};

// A mesh that fails the watertightness check (some undirected edge is not
// shared by exactly two facets with opposite directions).
class OpenMesh : public Error {
 public:
  using Error::Error;
};

// An invalid shape-generator request (non-positive dimension, subdivision
// level out of range, ...).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

// A numeric failure during evaluation (non-finite result, ray-jitter
// exhaustion in the voxelizer, zero q passed to an op that requires |q| > 0).
class NumericError : public Error {
 public:
  using Error::Error;
};

// Two sampled fields whose q grids do not match.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

// A backend failure during grid evaluation, with the offending q attached.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Base for mesh/CSV text-format errors; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class BadHeader : public ParseError {
 public:
  using ParseError::ParseError;
};

class CountMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

class IndexOutOfRange : public ParseError {
 public:
  using ParseError::ParseError;
};

class MalformedNumber : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace polyft
