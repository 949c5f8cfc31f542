#pragma once

#include <cstddef>
#include <vector>

#include "csg/invariants.hpp"
#include "csg/numerical.hpp"
#include "csg/semigroup.hpp"

namespace csg {

struct GluingResult {
  NumericalSemigroup semigroup;
  // Closed forms in terms of S1 and S2; each equals the direct computation.
  std::vector<Coord> pf_formula;
  std::size_t type_formula = 0;
  Coord frobenius_formula = 0;
};

// <lambda * gens(S1), mu * gens(S2)>. Throws InvalidGluingData if
// mu is not in S1 \ gens(S1), lambda is not in S2 \ gens(S2), or gcd != 1.
GluingResult glue(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Coord lambda,
                  Coord mu);

// <p n_1, ..., p n_e, sum a_j n_j>; throws InvalidExtensionData on bad data.
// The reduced type is checked to be preserved.
NumericalSemigroup nice_extension(const NumericalSemigroup& s, const std::vector<Coord>& a,
                                  Coord p);

struct BresinskyResult {
  NumericalSemigroup semigroup;
  std::vector<Coord> pf_formula;
  Coord frobenius_formula = 0;
  std::size_t reduced_type = 0;
};

std::vector<Coord> bresinsky_generators(Coord h);
std::vector<Coord> bresinsky_pf_formula(Coord h);
BresinskyResult bresinsky(Coord h);

// {x in N^d : |x|_1 in T}.
Semigroup t_graded(const NumericalSemigroup& t, std::size_t d);

// Thick_k(S, axis) inside N^{d+1}; `axis` is 1-based and names the position
// of the new coordinate. S must be a generalized numerical semigroup.
Semigroup thicken(const Semigroup& s, Coord k, std::size_t axis);

struct SFamilyResult {
  Semigroup semigroup;
  Coord p = 0;
  // p_{k,i} for k <= p - 2, each checked to be in PF and FA.
  PointSet witnesses;
  std::size_t type_lower_bound = 0;
  std::size_t embedding_dimension = 0;
};

std::vector<Point> s_family_generators(Coord a, Coord r, std::size_t d);
SFamilyResult s_family(Coord a, Coord r, std::size_t d);

// cone minus the down-set of the antichain A.
Semigroup antichain_semigroup(const RationalCone& cone, const PointSet& a);

}  // namespace csg
