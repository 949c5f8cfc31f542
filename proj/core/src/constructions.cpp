#include "csg/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "box.hpp"

namespace csg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InternalInconsistency, what);
}

std::vector<Coord> sorted(std::vector<Coord> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Point insert_coord(const Point& x, std::size_t pos, Coord value) {
  std::vector<Coord> c = x.coords();
  c.insert(c.begin() + static_cast<std::ptrdiff_t>(pos), value);
  return Point(std::move(c));
}

Point drop_coord(const Point& x, std::size_t pos) {
  std::vector<Coord> c = x.coords();
  c.erase(c.begin() + static_cast<std::ptrdiff_t>(pos));
  return Point(std::move(c));
}

}  // namespace

GluingResult glue(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Coord lambda,
                  Coord mu) {
  if (lambda <= 0 || mu <= 0) fail(ErrorKind::InvalidGluingData, "lambda and mu must be positive");
  if (!s1.contains(mu) || s1.is_generator(mu)) {
    fail(ErrorKind::InvalidGluingData, "mu must lie in S1 minus its minimal generators", {{mu}});
  }
  if (!s2.contains(lambda) || s2.is_generator(lambda)) {
    fail(ErrorKind::InvalidGluingData, "lambda must lie in S2 minus its minimal generators",
         {{lambda}});
  }
  if (std::gcd(lambda, mu) != 1) {
    fail(ErrorKind::InvalidGluingData, "gcd(lambda, mu) must be 1", {{lambda, mu}});
  }
  std::vector<Coord> gens;
  for (Coord n : s1.min_generators()) gens.push_back(arith::mul(lambda, n));
  for (Coord n : s2.min_generators()) gens.push_back(arith::mul(mu, n));

  GluingResult r{NumericalSemigroup(gens), {}, 0, 0};
  const Coord lm = arith::mul(lambda, mu);
  for (Coord f : s1.pseudo_frobenius()) {
    for (Coord g : s2.pseudo_frobenius()) {
      r.pf_formula.push_back(arith::add(arith::add(arith::mul(lambda, f), arith::mul(mu, g)), lm));
    }
  }
  r.pf_formula = sorted(r.pf_formula);
  r.type_formula = s1.type() * s2.type();
  r.frobenius_formula =
      arith::add(arith::add(arith::mul(lambda, s1.frobenius()), arith::mul(mu, s2.frobenius())), lm);

  require(r.semigroup.pseudo_frobenius() == r.pf_formula, "gluing PF formula disagrees");
  require(r.semigroup.type() == r.type_formula, "gluing type formula disagrees");
  require(r.semigroup.frobenius() == r.frobenius_formula, "gluing Frobenius formula disagrees");
  return r;
}

NumericalSemigroup nice_extension(const NumericalSemigroup& s, const std::vector<Coord>& a,
                                  Coord p) {
  const auto& n = s.min_generators();
  if (a.size() != n.size()) {
    fail(ErrorKind::InvalidExtensionData, "need one coefficient per minimal generator");
  }
  Coord next = 0, total = 0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (a[j] < 0) fail(ErrorKind::InvalidExtensionData, "coefficients must be nonnegative");
    next = arith::add(next, arith::mul(a[j], n[j]));
    total = arith::add(total, a[j]);
  }
  if (next == 0 || s.is_generator(next)) {
    fail(ErrorKind::InvalidExtensionData, "the new generator must lie in S minus its generators",
         {{next}});
  }
  if (p < 2) fail(ErrorKind::InvalidExtensionData, "p must be at least 2", {{p}});
  if (p > total) {
    fail(ErrorKind::InvalidExtensionData, "p exceeds the sum of the coefficients", {{p, total}});
  }
  if (std::gcd(p, next) != 1) {
    fail(ErrorKind::InvalidExtensionData, "gcd(p, new generator) must be 1", {{p, next}});
  }
  // A nice extension is the gluing of S with N along lambda = p, mu = next.
  GluingResult g = glue(s, NumericalSemigroup::naturals(), p, next);
  require(g.semigroup.reduced_type() == s.reduced_type(), "nice extension changed the reduced type");
  return g.semigroup;
}

std::vector<Coord> bresinsky_generators(Coord h) {
  if (h < 2) fail(ErrorKind::InvalidParameter, "Bresinsky parameter h must be at least 2", {{h}});
  const Coord a = 2 * h, b = 2 * h - 1, c = 2 * h + 1;
  return {a * c, b * c, a * c + b, b * a};
}

std::vector<Coord> bresinsky_pf_formula(Coord h) {
  if (h < 2) fail(ErrorKind::InvalidParameter, "Bresinsky parameter h must be at least 2", {{h}});
  const Coord base = (2 * h - 1) * (2 * h - 1) * (2 * h - 1) + 4 * h * (h - 2);
  std::vector<Coord> pf;
  for (Coord k = 0; k <= 2 * h - 3; ++k) pf.push_back(base + k * (2 * h - 1) + 1);
  for (Coord k = 0; k <= 2 * h - 2; ++k) pf.push_back(base + 2 * h * (2 * k + 1) + 2);
  return sorted(pf);
}

BresinskyResult bresinsky(Coord h) {
  BresinskyResult r{NumericalSemigroup(bresinsky_generators(h)), bresinsky_pf_formula(h), 0, 0};
  r.frobenius_formula =
      (2 * h - 1) * (2 * h - 1) * (2 * h - 1) + 4 * h * (h - 2) + 2 * h * (4 * h - 3) + 2;
  r.reduced_type = r.semigroup.reduced_type();
  require(r.semigroup.pseudo_frobenius() == r.pf_formula, "Bresinsky PF formula disagrees");
  require(r.semigroup.frobenius() == r.frobenius_formula, "Bresinsky Frobenius formula disagrees");
  require(r.semigroup.type() == static_cast<std::size_t>(4 * h - 3), "Bresinsky type is not 4h-3");
  require(r.reduced_type == static_cast<std::size_t>(h), "Bresinsky reduced type is not h");
  return r;
}

Semigroup t_graded(const NumericalSemigroup& t, std::size_t d) {
  if (d < 2) fail(ErrorKind::InvalidParameter, "T-graded semigroups need d >= 2");
  if (t.gaps().empty()) fail(ErrorKind::InvalidParameter, "T must have gaps");
  const Coord F = t.frobenius();
  PointSet gaps;
  detail::for_each_up_to_degree(d, F, [&](const Point& x) {
    if (!t.contains(x.degree())) gaps.insert(x);
  });
  Semigroup s = Semigroup::from_gaps(RationalCone::orthant(d), gaps);

  const auto pf_t = t.pseudo_frobenius();
  PointSet pf_closed;
  detail::for_each_up_to_degree(d, F, [&](const Point& x) {
    if (std::binary_search(pf_t.begin(), pf_t.end(), x.degree())) pf_closed.insert(x);
  });
  require(pseudo_frobenius(s) == pf_closed, "T-graded PF closed form disagrees");

  PointSet complement_closed;
  detail::for_each_up_to_degree(d, F, [&](const Point& x) {
    if (t.contains(x.degree())) complement_closed.insert(x);
  });
  require(conductor(s).complement() == complement_closed, "T-graded conductor closed form disagrees");

  const InvariantReport rep = classify(s);
  const bool t_maximal = t.reduced_type() == t.type();
  require(rep.flags.maximal_reduced_type == t_maximal, "T-graded maximal reduced type transfer fails");
  require(!rep.flags.minimal_reduced_type, "T-graded semigroup of minimal reduced type");
  return s;
}

Semigroup thicken(const Semigroup& s, Coord k, std::size_t axis) {
  const std::size_t d = s.dim();
  if (!(s.cone() == RationalCone::orthant(d))) {
    fail(ErrorKind::NotFullCone, "thickening needs a generalized numerical semigroup");
  }
  if (k < 0) fail(ErrorKind::InvalidParameter, "k must be nonnegative", {{k}});
  if (axis < 1 || axis > d + 1) {
    fail(ErrorKind::InvalidParameter, "axis must be between 1 and d+1",
         {{static_cast<Coord>(axis)}});
  }
  const std::size_t pos = axis - 1;
  const PointSet& H = s.gaps();

  PointSet gaps;
  for (Coord j = 0; j <= k; ++j) {
    for (const Point& h : H) gaps.insert(insert_coord(h, pos, j));
  }
  Semigroup t = Semigroup::from_gaps(RationalCone::orthant(d + 1), gaps);

  // The same gap set read off the definition S ∪ (e_i+S) ∪ ... ∪ ((k+1)e_i + N^{d+1}).
  Point hi(d);
  for (const Point& h : H) {
    for (std::size_t i = 0; i < d; ++i) hi[i] = std::max(hi[i], h[i]);
  }
  Point hi_big = insert_coord(hi, pos, k);
  PointSet by_definition;
  detail::for_each_in_box(Point(d + 1), hi_big, [&](const Point& x) {
    if (!(x[pos] >= k + 1 || s.contains(drop_coord(x, pos)))) by_definition.insert(x);
    return true;
  });
  require(by_definition == t.gaps(), "thickening gap set disagrees with its definition");

  if (!H.empty()) {
    PointSet pf_closed;
    for (const Point& f : pseudo_frobenius(s)) pf_closed.insert(insert_coord(f, pos, k));
    require(pseudo_frobenius(t) == pf_closed, "thickening PF closed form disagrees");

    const Conductor cs(s), ct(t);
    detail::for_each_in_box(Point(d + 1), insert_coord(hi, pos, k + 1), [&](const Point& x) {
      const bool closed = x[pos] >= k + 1 || cs.contains(drop_coord(x, pos));
      require(ct.contains(x) == closed, "thickening conductor closed form disagrees at " + x.str());
      return true;
    });

    const InvariantReport rs = classify(s), rt = classify(t);
    require(rs.flags.maximal_reduced_type == rt.flags.maximal_reduced_type,
            "thickening maximal reduced type transfer fails");
    require(rt.flags.minimal_reduced_type == (rs.pf.size() == 1),
            "thickening minimal reduced type criterion fails");
  }
  return t;
}

std::vector<Point> s_family_generators(Coord a, Coord r, std::size_t d) {
  if (r < 1 || a <= r + 1 || d < 2) {
    fail(ErrorKind::InvalidParameter, "S(a,r) needs r >= 1, a > r + 1 and d >= 2",
         {{a, r, static_cast<Coord>(d)}});
  }
  std::vector<Point> gens;
  for (std::size_t i = 0; i + 1 < d; ++i) gens.push_back(Point::unit(d, i));
  for (Coord j = a; j <= a + r; ++j) gens.push_back(Point::unit(d, d - 1) * j);
  for (std::size_t i = 0; i + 1 < d; ++i) gens.push_back(Point::unit(d, i) + Point::unit(d, d - 1));
  return gens;
}

SFamilyResult s_family(Coord a, Coord r, std::size_t d) {
  const auto gens = s_family_generators(a, r, d);
  // Gaps have degree below a + p a; Apery elements add at most one generator.
  const Coord p = arith::ceil_div(a - 1, r);
  const Coord bound = arith::add(arith::mul(p + 2, a), r);
  SFamilyResult res{Semigroup::from_generators(gens, bound), p, {}, 0, 0};
  const Semigroup& s = res.semigroup;
  require(s.is_c_semigroup(), "S(a,r) is not a generalized numerical semigroup");

  const PointSet pf = pseudo_frobenius(s);
  const PointSet fa = frobenius_allowable(s);
  for (Coord k = 0; k <= res.p - 2; ++k) {
    for (std::size_t i = 0; i + 1 < d; ++i) {
      Point w = Point::unit(d, i) * (a - k * r - 2) + Point::unit(d, d - 1) * ((k + 1) * a - 1);
      require(pf.count(w) && fa.count(w), "p_{k,i} = " + w.str() + " is not in PF ∩ FA");
      res.witnesses.insert(w);
    }
  }
  res.type_lower_bound = (d - 1) * static_cast<std::size_t>(res.p - 1);
  require(res.witnesses.size() == res.type_lower_bound, "p_{k,i} are not distinct");
  require(pf.size() >= res.type_lower_bound, "type below (d-1)(p-1)");
  res.embedding_dimension = s.min_generators().size();
  require(res.embedding_dimension == 2 * d + static_cast<std::size_t>(r) - 1,
          "embedding dimension is not 2d+r-1");
  return res;
}

Semigroup antichain_semigroup(const RationalCone& cone, const PointSet& a) {
  if (a.empty()) fail(ErrorKind::InvalidInput, "antichain must be nonempty");
  const std::size_t d = cone.dim();
  for (const Point& x : a) {
    require_dim(x, d, "antichain point");
    if (x.is_zero() || !x.is_nonnegative() || !cone.contains(x)) {
      fail(ErrorKind::InvalidInput, "antichain points must be nonzero points of the cone",
           {x.coords()});
    }
  }
  const PartialOrder leq = PartialOrder::cone(cone);
  for (const Point& x : a) {
    for (const Point& y : a) {
      if (leq.less(x, y)) {
        fail(ErrorKind::NotAnAntichain, x.str() + " lies below " + y.str(),
             {x.coords(), y.coords()});
      }
    }
  }
  PointSet gaps;
  for (const Point& top : a) {
    detail::for_each_in_box(Point(d), top, [&](const Point& x) {
      if (!x.is_zero() && cone.contains(x) && leq.leq(x, top)) gaps.insert(x);
      return true;
    });
  }
  Semigroup s = Semigroup::from_gaps(cone, gaps);
  require(maximal_gaps_cone(s) == a, "antichain semigroup has different maximal gaps");
  return s;
}

}  // namespace csg
