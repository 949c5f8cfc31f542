#include "csg/decomposition.hpp"

#include <algorithm>

#include "csg/invariants.hpp"

namespace csg {

namespace {

PointSet k_set(const PointSet& sg, const Semigroup& component) {
  PointSet k;
  for (const Point& h : sg) {
    if (!component.contains(h)) k.insert(h);
  }
  return k;
}

// Indices of a smallest subfamily of `sets` covering `universe`.
std::vector<std::size_t> exhaustive_cover(const std::vector<PointSet>& sets,
                                          const PointSet& universe) {
  const std::size_t n = sets.size();
  std::vector<std::size_t> best;
  for (std::size_t size = 1; size <= n && best.empty(); ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      PointSet covered;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) covered.insert(sets[i].begin(), sets[i].end());
      }
      if (covered == universe) {
        for (std::size_t i = 0; i < n; ++i) {
          if (pick[i]) best.push_back(i);
        }
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return best;
}

std::vector<std::size_t> greedy_cover(const std::vector<PointSet>& sets, const PointSet& universe) {
  std::vector<std::size_t> chosen;
  PointSet left = universe;
  while (!left.empty()) {
    std::size_t best = sets.size(), best_gain = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::size_t gain = 0;
      for (const Point& h : sets[i]) gain += left.count(h);
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == sets.size()) fail(ErrorKind::InternalInconsistency, "special gaps cannot be covered");
    chosen.push_back(best);
    for (const Point& h : sets[best]) left.erase(h);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

Semigroup adjoin_special_gap(const Semigroup& s, const Point& h) {
  if (!special_gaps(s).count(h)) {
    fail(ErrorKind::InvalidInput, h.str() + " is not a special gap", {h.coords()});
  }
  PointSet gaps = s.gaps();
  gaps.erase(h);
  return Semigroup::from_gaps(s.cone(), gaps);
}

std::size_t decomposition_lower_bound(const Semigroup& s) {
  if (s.gaps().empty()) return 0;
  return maximal_gaps_cone(s).size();
}

DecompositionResult decompose(const Semigroup& s) {
  if (s.gaps().empty()) fail(ErrorKind::NoGaps, "nothing to decompose");
  const PointSet sg = special_gaps(s);

  std::vector<Semigroup> candidates;
  for (const Point& h : sg) {
    Semigroup t = s;
    while (true) {
      const PointSet sg_t = special_gaps(t);
      if (sg_t.size() == 1) break;
      auto next = std::find_if(sg_t.begin(), sg_t.end(), [&](const Point& g) { return g != h; });
      PointSet gaps = t.gaps();
      gaps.erase(*next);
      t = Semigroup::from_gaps(t.cone(), gaps);
    }
    const bool duplicate = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const Semigroup& c) { return c.gaps() == t.gaps(); });
    if (!duplicate) candidates.push_back(t);
  }

  std::vector<PointSet> ks;
  for (const Semigroup& c : candidates) ks.push_back(k_set(sg, c));

  DecompositionResult r;
  r.exact_minimum = sg.size() <= kExhaustiveCoverLimit;
  const auto chosen = r.exact_minimum ? exhaustive_cover(ks, sg) : greedy_cover(ks, sg);
  for (std::size_t idx : chosen) r.components.push_back(candidates[idx]);
  for (const Point& h : sg) {
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      if (!r.components[i].contains(h)) {
        r.cover_map.emplace(h, i);
        break;
      }
    }
  }
  r.lower_bound = decomposition_lower_bound(s);

  const DecompositionCheck check = verify_decomposition(s, r.components);
  if (!check.verified()) fail(ErrorKind::InternalInconsistency, "decomposition does not verify");
  for (const Semigroup& c : r.components) {
    if (special_gaps(c).size() != 1) fail(ErrorKind::InternalInconsistency, "reducible component");
  }
  if (r.components.size() < r.lower_bound) {
    fail(ErrorKind::InternalInconsistency, "fewer components than maximal gaps");
  }
  return r;
}

DecompositionCheck verify_decomposition(const Semigroup& s,
                                        const std::vector<Semigroup>& components) {
  const PointSet& H = s.gaps();
  for (const Semigroup& c : components) {
    if (!(c.cone() == s.cone())) {
      fail(ErrorKind::NotOversemigroup, "component over a different cone");
    }
    for (const Point& g : c.gaps()) {
      if (!H.count(g)) {
        fail(ErrorKind::NotOversemigroup, "component misses " + g.str() + " of S", {g.coords()});
      }
    }
  }
  const PointSet sg = H.empty() ? PointSet{} : special_gaps(s);

  DecompositionCheck out;
  PointSet union_gaps;
  for (const Semigroup& c : components) union_gaps.insert(c.gaps().begin(), c.gaps().end());
  out.intersection_equals = (union_gaps == H);

  out.special_gaps_are_gaps = true;
  for (const Point& h : sg) {
    const bool found = std::any_of(components.begin(), components.end(),
                                   [&](const Semigroup& c) { return c.gaps().count(h) > 0; });
    if (!found) {
      out.special_gaps_are_gaps = false;
      out.uncovered.insert(h);
    }
  }

  PointSet k_union;
  for (const Semigroup& c : components) {
    PointSet k = k_set(sg, c);
    k_union.insert(k.begin(), k.end());
  }
  out.k_sets_cover = (k_union == sg);

  if (out.intersection_equals != out.special_gaps_are_gaps ||
      out.special_gaps_are_gaps != out.k_sets_cover) {
    fail(ErrorKind::InternalInconsistency, "decomposition criteria disagree");
  }
  return out;
}

}  // namespace csg
