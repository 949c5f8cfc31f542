#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "csg/semigroup.hpp"

namespace csg {

struct ClassificationFlags {
  bool symmetric = false;
  bool almost_symmetric = false;
  bool quasi_irreducible = false;
  bool quasi_symmetric = false;
  bool irreducible = false;
  bool minimal_reduced_type = false;
  bool maximal_reduced_type = false;
};

struct InvariantReport {
  // Set for gap-free semigroups; every other field is then empty or zero.
  bool trivial_full = false;
  PointSet pf;
  PointSet sg;
  PointSet fa;
  PointSet max_gaps_cone;
  std::optional<Point> f_cone;
  PointSet conductor_complement;
  std::size_t type = 0;
  // (n_i, s(S, n_i)) in the order of the cone rays.
  std::vector<std::pair<Point, std::size_t>> reduced_type;
  std::size_t tau = 0;
  ClassificationFlags flags;
};

// The gap-side functions below throw NotACSemigroup when the gap set is
// infinite and NoGaps when it is empty.
PointSet pseudo_frobenius(const Semigroup& s);
PointSet special_gaps(const Semigroup& s);
PointSet frobenius_allowable(const Semigroup& s);
PointSet maximal_gaps_cone(const Semigroup& s);
// F_C(S), when the cone-order maximal gaps form a single point.
std::optional<Point> frobenius_cone(const Semigroup& s);

// The conductor described through the cone-maximal gaps: x in S lies in it iff
// no maximal gap dominates x in the cone order.
class Conductor {
 public:
  explicit Conductor(const Semigroup& s);
  bool contains(const Point& p) const;
  // S minus the conductor; finite.
  const PointSet& complement() const noexcept { return complement_; }

 private:
  Semigroup s_;
  PointSet maxima_;
  PointSet complement_;
};

inline Conductor conductor(const Semigroup& s) { return Conductor(s); }

std::size_t type(const Semigroup& s);
std::size_t reduced_type(const Semigroup& s, const Point& n);
// |conductor ∩ Maximals Ap(S,E)|; defined for every simplicial model.
std::size_t reduced_type_wrt_E(const Semigroup& s);

struct QuasiIrreducibleConditions {
  bool maximals_equal_sg = false;
  bool pf_or_double_maximal = false;
  bool gaps_below_maximal = false;
};
QuasiIrreducibleConditions quasi_irreducible_conditions(const Semigroup& s);

struct TwoSided {
  bool direct = false;
  bool characterization = false;
};
TwoSided quasi_symmetric_sides(const Semigroup& s);
TwoSided minimal_reduced_type_sides(const Semigroup& s);
TwoSided maximal_reduced_type_sides(const Semigroup& s);
// For quasi-irreducible S: maximal reduced type against the halves criterion.
TwoSided maximal_reduced_type_halves(const Semigroup& s);

// Throws InternalInconsistency when one of the equivalences disagrees.
InvariantReport classify(const Semigroup& s);

}  // namespace csg
