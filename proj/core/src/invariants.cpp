#include "csg/invariants.hpp"

#include <algorithm>

#include "box.hpp"

namespace csg {

namespace {

const PointSet& nonempty_gaps(const Semigroup& s) {
  const PointSet& h = s.gaps();
  if (h.empty()) fail(ErrorKind::NoGaps, "the semigroup has no gaps");
  return h;
}

bool cone_leq(const Semigroup& s, const Point& a, const Point& b) {
  return s.cone().contains(b - a);
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InternalInconsistency, what);
}

bool is_extremal(const Semigroup& s, const Point& n) {
  const auto& E = s.extremal_rays();
  return std::find(E.begin(), E.end(), n) != E.end();
}

}  // namespace

PointSet pseudo_frobenius(const Semigroup& s) {
  const PointSet& H = nonempty_gaps(s);
  PointSet pf;
  for (const Point& h : H) {
    bool ok = true;
    for (const Point& g : s.min_generators()) {
      if (!s.contains(h + g)) {
        ok = false;
        break;
      }
    }
    if (ok) pf.insert(h);
  }
  return pf;
}

PointSet special_gaps(const Semigroup& s) {
  PointSet sg;
  for (const Point& f : pseudo_frobenius(s)) {
    if (s.contains(f * 2)) sg.insert(f);
  }
  return sg;
}

PointSet frobenius_allowable(const Semigroup& s) {
  return maximals(nonempty_gaps(s), PartialOrder::natural());
}

PointSet maximal_gaps_cone(const Semigroup& s) {
  return maximals(nonempty_gaps(s), PartialOrder::cone(s.cone()));
}

std::optional<Point> frobenius_cone(const Semigroup& s) {
  PointSet m = maximal_gaps_cone(s);
  if (m.size() == 1) return *m.begin();
  return std::nullopt;
}

Conductor::Conductor(const Semigroup& s) : s_(s) {
  const PointSet& H = s.gaps();
  if (H.empty()) return;
  maxima_ = maximals(H, PartialOrder::cone(s.cone()));
  for (const Point& F : maxima_) {
    detail::for_each_in_box(Point(s.dim()), F, [&](const Point& x) {
      if (s.contains(x) && cone_leq(s, x, F)) complement_.insert(x);
      return true;
    });
  }
}

bool Conductor::contains(const Point& p) const {
  if (!s_.contains(p)) return false;
  for (const Point& F : maxima_) {
    if (cone_leq(s_, p, F)) return false;
  }
  return true;
}

std::size_t type(const Semigroup& s) {
  const std::size_t t = pseudo_frobenius(s).size();
  const Point& g = *s.min_generators().begin();
  require(maximal_apery_wrt_point(s, g).size() == t,
          "type differs from the number of maximal Apery elements");
  return t;
}

std::size_t reduced_type(const Semigroup& s, const Point& n) {
  require_dim(n, s.dim(), "extremal ray");
  if (!is_extremal(s, n)) {
    fail(ErrorKind::NotAnExtremalRay, n.str() + " is not a minimal extremal ray", {n.coords()});
  }
  const PointSet pf = pseudo_frobenius(s);
  const PointSet maxap = maximal_apery_wrt_point(s, n);
  PointSet shifted;
  for (const Point& f : pf) shifted.insert(f + n);
  require(maxap == shifted, "maximal Apery elements differ from PF + n");

  const Conductor c(s);
  std::size_t count = 0, count_by_definition = 0;
  for (const Point& m : maxap) {
    if (c.contains(m)) ++count;
    if (s.in_conductor(m)) ++count_by_definition;
  }
  require(count == count_by_definition, "conductor characterizations disagree");
  require(count >= 1 && count <= pf.size(), "reduced type outside [1, type]");
  return count;
}

std::size_t reduced_type_wrt_E(const Semigroup& s) {
  const AperySet ap = s.apery_wrt_E();
  std::size_t count = 0;
  for (const Point& m : ap.maximal_elements) {
    if (s.in_conductor(m)) ++count;
  }
  return count;
}

QuasiIrreducibleConditions quasi_irreducible_conditions(const Semigroup& s) {
  const PointSet& H = nonempty_gaps(s);
  const PointSet pf = pseudo_frobenius(s);
  const PointSet sg = special_gaps(s);
  const PointSet mx = maximal_gaps_cone(s);
  QuasiIrreducibleConditions q;
  q.maximals_equal_sg = (mx == sg);
  q.pf_or_double_maximal = std::all_of(pf.begin(), pf.end(), [&](const Point& f) {
    return mx.count(f) || mx.count(f * 2);
  });
  q.gaps_below_maximal = std::all_of(H.begin(), H.end(), [&](const Point& h) {
    if (mx.count(h * 2)) return true;
    return std::any_of(mx.begin(), mx.end(), [&](const Point& F) { return s.contains(F - h); });
  });
  return q;
}

TwoSided quasi_symmetric_sides(const Semigroup& s) {
  const PointSet& H = nonempty_gaps(s);
  const PointSet mx = maximal_gaps_cone(s);
  TwoSided t;
  t.direct = (mx == pseudo_frobenius(s));
  t.characterization = std::all_of(H.begin(), H.end(), [&](const Point& h) {
    return std::any_of(mx.begin(), mx.end(), [&](const Point& F) { return s.contains(F - h); });
  });
  return t;
}

TwoSided minimal_reduced_type_sides(const Semigroup& s) {
  TwoSided t;
  t.direct = true;
  for (const Point& n : s.extremal_rays()) {
    if (reduced_type(s, n) != 1) t.direct = false;
  }
  const auto F = frobenius_cone(s);
  t.characterization = F.has_value();
  if (F) {
    for (const Point& f : pseudo_frobenius(s)) {
      if (f == *F) continue;
      for (const Point& n : s.extremal_rays()) {
        if (!cone_leq(s, f, *F - n)) t.characterization = false;
      }
    }
  }
  return t;
}

TwoSided maximal_reduced_type_sides(const Semigroup& s) {
  const std::size_t t_s = pseudo_frobenius(s).size();
  TwoSided t;
  t.direct = true;
  for (const Point& n : s.extremal_rays()) {
    if (reduced_type(s, n) != t_s) t.direct = false;
  }
  const PointSet mx = maximal_gaps_cone(s);
  t.characterization = true;
  for (const Point& f : pseudo_frobenius(s)) {
    for (const Point& n : s.extremal_rays()) {
      for (const Point& F : mx) {
        if (cone_leq(s, f + n, F)) t.characterization = false;
      }
    }
  }
  return t;
}

TwoSided maximal_reduced_type_halves(const Semigroup& s) {
  const PointSet pf = pseudo_frobenius(s);
  const PointSet mx = maximal_gaps_cone(s);
  TwoSided t;
  t.direct = maximal_reduced_type_sides(s).direct;
  t.characterization = true;
  for (const Point& f : mx) {
    bool even = std::all_of(f.coords().begin(), f.coords().end(),
                            [](Coord v) { return v % 2 == 0; });
    if (!even) continue;
    Point half(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) half[i] = f[i] / 2;
    if (!pf.count(half)) continue;
    for (const Point& n : s.extremal_rays()) {
      for (const Point& F : mx) {
        if (cone_leq(s, half + n, F)) t.characterization = false;
      }
    }
  }
  return t;
}

InvariantReport classify(const Semigroup& s) {
  InvariantReport r;
  if (s.gaps().empty()) {
    r.trivial_full = true;
    return r;
  }
  r.pf = pseudo_frobenius(s);
  r.sg = special_gaps(s);
  r.fa = frobenius_allowable(s);
  r.max_gaps_cone = maximal_gaps_cone(s);
  r.f_cone = frobenius_cone(s);
  r.conductor_complement = conductor(s).complement();
  r.type = type(s);
  r.tau = r.max_gaps_cone.size();
  for (const Point& n : s.extremal_rays()) r.reduced_type.emplace_back(n, reduced_type(s, n));

  auto subset = [](const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  require(subset(r.fa, r.max_gaps_cone) && subset(r.max_gaps_cone, r.sg) && subset(r.sg, r.pf),
          "containment chain FA ⊆ Maximals ⊆ SG ⊆ PF fails");

  ClassificationFlags& f = r.flags;
  f.symmetric = r.f_cone && r.pf == PointSet{*r.f_cone};
  f.almost_symmetric = r.f_cone.has_value();
  if (r.f_cone) {
    for (const Point& p : r.pf) {
      if (p != *r.f_cone && !r.pf.count(*r.f_cone - p)) f.almost_symmetric = false;
    }
  }

  const QuasiIrreducibleConditions q = quasi_irreducible_conditions(s);
  require(q.maximals_equal_sg == q.pf_or_double_maximal &&
              q.pf_or_double_maximal == q.gaps_below_maximal,
          "quasi-irreducibility conditions disagree");
  f.quasi_irreducible = q.maximals_equal_sg;

  const TwoSided qs = quasi_symmetric_sides(s);
  require(qs.direct == qs.characterization, "quasi-symmetry characterizations disagree");
  f.quasi_symmetric = qs.direct;

  f.irreducible = r.sg.size() == 1;

  const TwoSided mn = minimal_reduced_type_sides(s);
  require(mn.direct == mn.characterization, "minimal reduced type characterizations disagree");
  f.minimal_reduced_type = mn.direct;

  const TwoSided mxr = maximal_reduced_type_sides(s);
  require(mxr.direct == mxr.characterization, "maximal reduced type characterizations disagree");
  f.maximal_reduced_type = mxr.direct;

  require(r.tau <= r.type, "tau exceeds the type");
  if (f.quasi_irreducible) require(r.type <= 2 * r.tau, "type exceeds twice tau");
  return r;
}

}  // namespace csg
