#include "document.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

namespace csg::cli {

namespace {

Coord parse_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    fail(ErrorKind::InvalidInput, std::string(what) + ": expected an integer, got " + j.dump());
  }
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    fail(ErrorKind::InvalidInput, std::string(what) + ": integer out of range");
  }
  return j.get<Coord>();
}

std::vector<Point> parse_points(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, std::string(what) + " must be a list");
  std::vector<Point> out;
  for (const auto& e : j) out.push_back(parse_point(e));
  for (const auto& p : out) require_dim(p, out.front().dim(), what);
  return out;
}

}  // namespace

Point parse_point(const json& j) {
  if (j.is_number()) return Point{parse_int(j, "coordinate")};
  if (!j.is_array() || j.empty()) fail(ErrorKind::InvalidInput, "a point is an integer or a list of integers");
  std::vector<Coord> c;
  for (const auto& x : j) c.push_back(parse_int(x, "coordinate"));
  return Point(std::move(c));
}

Document parse_document(const json& j) {
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "document must be a JSON object");
  const int shapes = static_cast<int>(j.contains("generators")) + static_cast<int>(j.contains("numerical")) +
                     static_cast<int>(j.contains("cone_rays") || j.contains("gaps"));
  if (shapes != 1) {
    fail(ErrorKind::InvalidInput, "document needs exactly one of generators, {cone_rays, gaps}, numerical");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "generators" && key != "numerical" && key != "cone_rays" && key != "gaps" && key != "bound") {
      fail(ErrorKind::InvalidInput, "unknown key " + key);
    }
  }
  Document d;
  if (j.contains("bound")) d.bound = parse_int(j.at("bound"), "bound");
  if (j.contains("generators")) {
    d.kind = Document::Kind::Generators;
    d.generators = parse_points(j.at("generators"), "generators");
    if (d.generators.empty()) fail(ErrorKind::InvalidInput, "no generators given");
  } else if (j.contains("numerical")) {
    d.kind = Document::Kind::Numerical;
    if (!j.at("numerical").is_array()) fail(ErrorKind::InvalidInput, "numerical must be a list");
    for (const auto& x : j.at("numerical")) d.numerical.push_back(parse_int(x, "numerical generator"));
  } else {
    if (!j.contains("cone_rays") || !j.contains("gaps")) {
      fail(ErrorKind::InvalidInput, "gap-set documents need both cone_rays and gaps");
    }
    d.kind = Document::Kind::GapSet;
    d.cone_rays = parse_points(j.at("cone_rays"), "cone_rays");
    if (d.cone_rays.empty()) fail(ErrorKind::InvalidInput, "no cone rays given");
    for (const auto& g : parse_points(j.at("gaps"), "gaps")) {
      require_dim(g, d.cone_rays.front().dim(), "gaps");
      d.gaps.insert(g);
    }
  }
  return d;
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

json point_json(const Point& p) {
  if (p.dim() == 1) return p[0];
  return p.coords();
}

json points_json(const PointSet& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(point_json(p));
  return out;
}

json points_json(const std::vector<Point>& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(point_json(p));
  return out;
}

json to_json(const Document& d) {
  json j;
  switch (d.kind) {
    case Document::Kind::Generators:
      j["generators"] = points_json(d.generators);
      break;
    case Document::Kind::GapSet:
      j["cone_rays"] = points_json(d.cone_rays);
      j["gaps"] = points_json(d.gaps);
      break;
    case Document::Kind::Numerical:
      j["numerical"] = d.numerical;
      break;
  }
  if (d.bound) j["bound"] = *d.bound;
  return j;
}

Document gapset_document(const Semigroup& s) {
  Document d;
  d.kind = Document::Kind::GapSet;
  d.cone_rays = s.cone().rays();
  d.gaps = s.gaps();
  return d;
}

Document numerical_document(const NumericalSemigroup& s) {
  Document d;
  d.kind = Document::Kind::Numerical;
  d.numerical = s.min_generators();
  return d;
}

std::optional<NumericalSemigroup> build_numerical(const Document& d, Coord bound) {
  if (d.kind != Document::Kind::Numerical) return std::nullopt;
  if (d.numerical.empty()) fail(ErrorKind::InvalidInput, "no numerical generators given");
  if (d.numerical == std::vector<Coord>{1}) return NumericalSemigroup::naturals();
  if (d.bound) return NumericalSemigroup(d.numerical, *d.bound);
  Coord lo = d.numerical.front(), hi = d.numerical.front();
  for (Coord n : d.numerical) {
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  return NumericalSemigroup(d.numerical, std::max(bound, arith::mul(lo, hi)));
}

Semigroup build(const Document& d, Coord bound) {
  switch (d.kind) {
    case Document::Kind::Generators:
      return Semigroup::from_generators(d.generators, d.bound.value_or(bound));
    case Document::Kind::GapSet:
      return Semigroup::from_gaps(RationalCone::from_rays(d.cone_rays), d.gaps);
    case Document::Kind::Numerical:
      return build_numerical(d, bound)->model();
  }
  fail(ErrorKind::InvalidInput, "unknown document kind");
}

}  // namespace csg::cli
