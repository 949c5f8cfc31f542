#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csg/csg.hpp"
#include "json.hpp"

namespace csg::cli {

using nlohmann::json;

// One input presentation, as read from or written to JSON. Exactly one of the
// three shapes is populated.
struct Document {
  enum class Kind { Generators, GapSet, Numerical };
  Kind kind = Kind::Generators;
  std::vector<Point> generators;
  std::optional<Coord> bound;
  std::vector<Point> cone_rays;
  PointSet gaps;
  std::vector<Coord> numerical;
};

// Throws csg::Error (InvalidInput or DimensionMismatch) on malformed input.
Document parse_document(const json& j);
Document read_document(const std::string& path);
json to_json(const Document& d);

Document gapset_document(const Semigroup& s);
Document numerical_document(const NumericalSemigroup& s);

// The semigroup a document describes. Numerical documents use the larger of
// `bound` and m * M.
Semigroup build(const Document& d, Coord bound);
std::optional<NumericalSemigroup> build_numerical(const Document& d, Coord bound);

// Points of dimension 1 are written as plain integers.
json point_json(const Point& p);
json points_json(const PointSet& s);
json points_json(const std::vector<Point>& s);
Point parse_point(const json& j);

}  // namespace csg::cli
