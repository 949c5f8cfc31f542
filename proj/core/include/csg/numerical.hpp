#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "csg/semigroup.hpp"

namespace csg {

// A numerical semigroup, backed by the one-dimensional model. N itself is
// allowed and follows the conventions PF(N) = {-1}, F(N) = -1.
class NumericalSemigroup {
 public:
  // Generators must be positive with gcd 1. The default search bound is
  // max(100, m * M) for least and greatest generators m, M, which exceeds
  // the Frobenius number.
  explicit NumericalSemigroup(const std::vector<Coord>& generators,
                              std::optional<Coord> search_bound = std::nullopt);
  static NumericalSemigroup naturals();

  const Semigroup& model() const noexcept { return model_; }
  const std::vector<Coord>& min_generators() const noexcept { return gens_; }
  const std::vector<Coord>& gaps() const noexcept { return gaps_; }
  Coord multiplicity() const noexcept { return gens_.front(); }
  Coord frobenius() const noexcept { return gaps_.empty() ? -1 : gaps_.back(); }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }

  bool contains(Coord n) const;
  bool is_generator(Coord n) const;
  std::vector<Coord> pseudo_frobenius() const;
  std::size_t type() const { return pseudo_frobenius().size(); }
  // s(S, m(S)). Checked against |H ∩ [F - m + 1, F]|.
  std::size_t reduced_type() const;

 private:
  explicit NumericalSemigroup(Semigroup model);
  Semigroup model_;
  std::vector<Coord> gens_;
  std::vector<Coord> gaps_;
};

}  // namespace csg
