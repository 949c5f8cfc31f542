#include "csg/numerical.hpp"

#include <algorithm>
#include <numeric>

#include "csg/invariants.hpp"

namespace csg {

namespace {

Semigroup build_model(const std::vector<Coord>& generators, std::optional<Coord> bound) {
  if (generators.empty()) fail(ErrorKind::InvalidInput, "no generators given");
  Coord g = 0;
  for (Coord n : generators) {
    if (n <= 0) fail(ErrorKind::InvalidInput, "numerical generators must be positive", {{n}});
    g = std::gcd(g, n);
  }
  if (g != 1) fail(ErrorKind::InvalidInput, "numerical generators must have gcd 1");
  const auto [lo, hi] = std::minmax_element(generators.begin(), generators.end());
  const Coord b = bound ? *bound : std::max(kDefaultSearchBound, arith::mul(*lo, *hi));
  std::vector<Point> pts;
  for (Coord n : generators) pts.push_back(Point{n});
  return Semigroup::from_generators(pts, b);
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(const std::vector<Coord>& generators,
                                       std::optional<Coord> search_bound)
    : NumericalSemigroup(build_model(generators, search_bound)) {}

NumericalSemigroup::NumericalSemigroup(Semigroup model) : model_(std::move(model)) {
  if (model_.dim() != 1) fail(ErrorKind::DimensionMismatch, "numerical semigroups live in N");
  for (const Point& p : model_.min_generators()) gens_.push_back(p[0]);
  for (const Point& p : model_.gaps()) gaps_.push_back(p[0]);
  std::sort(gens_.begin(), gens_.end());
}

NumericalSemigroup NumericalSemigroup::naturals() { return NumericalSemigroup({1}); }

bool NumericalSemigroup::contains(Coord n) const { return model_.contains(Point{n}); }

bool NumericalSemigroup::is_generator(Coord n) const {
  return std::binary_search(gens_.begin(), gens_.end(), n);
}

std::vector<Coord> NumericalSemigroup::pseudo_frobenius() const {
  if (gaps_.empty()) return {-1};
  std::vector<Coord> out;
  for (const Point& p : csg::pseudo_frobenius(model_)) out.push_back(p[0]);
  return out;
}

std::size_t NumericalSemigroup::reduced_type() const {
  if (gaps_.empty()) return 1;
  const Coord F = frobenius();
  const Coord m = multiplicity();
  const std::size_t by_window = static_cast<std::size_t>(
      std::count_if(gaps_.begin(), gaps_.end(), [&](Coord h) { return h >= F - m + 1; }));
  const std::size_t by_model = csg::reduced_type(model_, Point{m});
  if (by_window != by_model) {
    fail(ErrorKind::InternalInconsistency, "numerical reduced type disagrees with the model");
  }
  return by_model;
}

}  // namespace csg
