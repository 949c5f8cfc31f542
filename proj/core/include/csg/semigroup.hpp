#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "csg/cone.hpp"
#include "csg/order.hpp"
#include "csg/point.hpp"

namespace csg {

inline constexpr Coord kDefaultSearchBound = 100;

struct GeneratorsPresentation {
  std::vector<Point> generators;
  Coord search_bound = kDefaultSearchBound;
};

struct GapSetPresentation {
  RationalCone cone;
  PointSet gaps;
};

using Presentation = std::variant<GeneratorsPresentation, GapSetPresentation>;

struct AperySet {
  std::vector<Point> base;
  PointSet elements;
  // Maximal elements under the semigroup order.
  PointSet maximal_elements;
};

// One residue class of Z^d modulo the lattice spanned by the minimal extremal
// rays. Inside the class a point is base + sum k_i n_i with k in N^d, and it
// belongs to S iff k dominates one of the minimal steps.
struct ResidueClass {
  Point base;
  std::vector<Point> minimal_steps;
};

// A validated affine semigroup over a pointed cone inside N^d. Cheap to copy;
// the computed data is shared and immutable.
//
// Generator presentations must span a simplicial cone and may describe
// semigroups with infinitely many gaps; `is_c_semigroup()` tells them apart.
// Gap-set presentations are C-semigroups by construction and may use any
// pointed cone.
class Semigroup {
 public:
  static Semigroup build(const Presentation& p);
  static Semigroup from_generators(const std::vector<Point>& generators,
                                   Coord search_bound = kDefaultSearchBound);
  static Semigroup from_gaps(const RationalCone& cone, const PointSet& gaps);

  std::size_t dim() const;
  const RationalCone& cone() const;
  const PointSet& min_generators() const;
  // n_i, aligned with cone().rays().
  const std::vector<Point>& extremal_rays() const;
  bool is_c_semigroup() const;
  bool is_simplicial() const;
  bool has_gaps() const;
  // Throws NotACSemigroup if the gap set is infinite.
  const PointSet& gaps() const;
  Coord search_bound() const;

  bool contains(const Point& p) const;
  // Membership decided from the residue class table alone (simplicial models).
  bool contains_by_classes(const Point& p) const;
  const std::map<Point, ResidueClass>& class_table() const;

  // c with c + (cone ∩ group(S)) ⊆ S.
  const Point& conductor_certificate() const;
  // s in S with s + (cone ∩ group(S)) ⊆ S.
  bool in_conductor(const Point& p) const;
  // Minimal elements of the conductor ideal (simplicial models).
  PointSet conductor_minimal_elements() const;

  AperySet apery_wrt_E() const;

  PartialOrder order() const;

 private:
  struct Impl;
  explicit Semigroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

};

// Ap(S,E) recomputed by scanning a box around the parallelepiped of E; a second
// route for C-semigroups over simplicial cones.
PointSet apery_wrt_E_by_scan(const Semigroup& s);

// Maximal elements of Ap(S,x) under the semigroup order.
PointSet maximal_apery_wrt_point(const Semigroup& s, const Point& x);

}  // namespace csg
