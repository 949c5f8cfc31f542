#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "csg/semigroup.hpp"

namespace csg {

struct DecompositionResult {
  std::vector<Semigroup> components;
  // Special gap of S -> index of a component that keeps it as a gap.
  std::map<Point, std::size_t> cover_map;
  std::size_t lower_bound = 0;
  // True when the component count was minimized exhaustively.
  bool exact_minimum = false;
};

// Special gaps are covered exhaustively up to this many; greedily beyond.
inline constexpr std::size_t kExhaustiveCoverLimit = 12;

DecompositionResult decompose(const Semigroup& s);

struct DecompositionCheck {
  bool intersection_equals = false;   // S is the intersection of the components
  bool special_gaps_are_gaps = false; // every special gap is a gap of some component
  bool k_sets_cover = false;          // the K(S_i) sets cover SG(S)
  PointSet uncovered;
  bool verified() const { return intersection_equals && special_gaps_are_gaps && k_sets_cover; }
};

// Throws NotOversemigroup if a component over a different cone or missing an
// element of S is passed, and InternalInconsistency if the three conditions
// disagree.
DecompositionCheck verify_decomposition(const Semigroup& s, const std::vector<Semigroup>& components);

std::size_t decomposition_lower_bound(const Semigroup& s);

// The oversemigroup obtained by adjoining the special gap h.
Semigroup adjoin_special_gap(const Semigroup& s, const Point& h);

}  // namespace csg
