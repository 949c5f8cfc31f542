// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "examples.hpp"
#include "random_models.hpp"

using namespace csg;
using namespace csg::test;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << show(got) << ", want " << show(want);
    failures_.push_back(os.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  static std::string show(const PointSet& s) { return to_string(s); }
  template <class T>
  static std::string show(const std::vector<T>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "}";
    return os.str();
  }
  template <class T>
  static std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

  std::vector<std::string> failures_;
};

bool subset(const PointSet& a, const PointSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }
bool strict_subset(const PointSet& a, const PointSet& b) { return a.size() < b.size() && subset(a, b); }

template <class F>
void for_box(std::size_t d, Coord side, F&& f) {
  Point p(d);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d) {
      f(p);
      return;
    }
    for (Coord v = 0; v <= side; ++v) {
      p[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

std::vector<Coord> random_numerical(std::mt19937_64& g, Coord max_gen) {
  while (true) {
    const int k = static_cast<int>(uniform(g, 2, 3));
    std::vector<Coord> gens;
    for (int i = 0; i < k; ++i) gens.push_back(uniform(g, 2, max_gen));
    Coord d = 0;
    for (Coord x : gens) d = std::gcd(d, x);
    if (d == 1) return gens;
  }
}

std::vector<Coord> minimal(const std::vector<Coord>& gens) {
  std::vector<Coord> sorted = gens, out;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Coord g : sorted) {
    Sieve sv(out, g);
    if (out.empty() || !sv.contains(g)) out.push_back(g);
  }
  return out;
}

void ac01(Check& c) {
  const auto s = Semigroup::from_generators(cone3d_generators());
  const PointSet four{Point{2, 2, 1}, Point{2, 3, 2}, Point{4, 1, 2}, Point{8, 4, 7}};
  c.equal(s.gaps(), cone3d_gaps(), "gaps");
  c.equal(frobenius_allowable(s), PointSet{Point{8, 4, 7}}, "FA");
  c.equal(maximal_gaps_cone(s), four, "Maximals");
  c.equal(special_gaps(s), four, "SG");
  c.equal(pseudo_frobenius(s), four, "PF");
}

void ac02(Check& c) {
  const auto cone = RationalCone::from_rays(cone2d_rays());
  const auto s = Semigroup::from_gaps(cone, cone2d_gaps());
  PointSet sg = cone2d_gaps();
  sg.erase(Point{1, 1});
  c.equal(frobenius_allowable(s), PointSet{Point{3, 3}}, "FA");
  c.equal(maximal_gaps_cone(s), PointSet{Point{2, 3}, Point{3, 1}, Point{3, 2}, Point{3, 3}}, "Maximals");
  c.equal(special_gaps(s), sg, "SG");
  c.equal(pseudo_frobenius(s), cone2d_gaps(), "PF");
  PointSet tg = cone2d_gaps();
  tg.erase(Point{2, 1});
  const auto t = Semigroup::from_gaps(cone, tg);
  const auto fa = frobenius_allowable(t), mx = maximal_gaps_cone(t), tsg = special_gaps(t);
  c.equal(tsg, pseudo_frobenius(t), "SG(T) = PF(T)");
  c.expect(strict_subset(fa, mx), "FA(T) strictly inside Maximals(T)");
  c.expect(strict_subset(mx, tsg), "Maximals(T) strictly inside SG(T)");
}

void ac03(Check& c) {
  const auto s = Semigroup::from_generators(apery_small_generators());
  const auto ap = s.apery_wrt_E();
  c.equal(ap.elements,
          PointSet{Point{0, 0}, Point{1, 2}, Point{1, 1}, Point{2, 2}, Point{3, 3}, Point{2, 3}, Point{3, 4}, Point{4, 5}},
          "Ap(S,E)");
  const Point x{3, 4};
  c.expect(s.in_conductor(x), "(3,4) in the conductor");
  c.expect(ap.elements.count(x) == 1, "(3,4) in Ap(S,E)");
  c.expect(ap.maximal_elements.count(x) == 0, "(3,4) not maximal");
  c.expect(s.order().leq(x, Point{4, 5}), "(3,4) <=_S (4,5)");
}

void ac04(Check& c) {
  const auto gens = apery_empty_generators();
  const auto s = Semigroup::from_generators(gens);
  PointSet stated(gens.begin(), gens.end());
  stated.insert(Point{0, 0});
  // Ap(S,E) cannot contain E itself; the literal statement is checked as written.
  c.equal(s.apery_wrt_E().elements, stated, "Ap(S,E) = generators + 0 (as stated)");
  c.equal(s.conductor_minimal_elements(), PointSet{Point{4, 6}}, "conductor minimal elements");
  for_box(2, 12, [&](const Point& p) {
    if (s.contains(p)) c.expect(s.in_conductor(p) == (p[0] >= 4 && p[1] >= 6), "conductor = (4,6)+N^2 at " + to_string(p));
  });
  c.equal(reduced_type_wrt_E(s), std::size_t{0}, "conductor meets no Apery maximal");
}

void ac05(Check& c) {
  const auto s = Semigroup::from_gaps(RationalCone::orthant(2), almost_symmetric_gaps());
  c.equal(pseudo_frobenius(s), PointSet{Point{8, 8}, Point{4, 4}}, "PF");
  c.equal(s.extremal_rays(), std::vector<Point>{Point{0, 3}, Point{3, 0}}, "extremal rays");
  const auto r = classify(s);
  c.expect(r.flags.almost_symmetric, "almost symmetric");
  c.expect(!r.flags.symmetric, "not symmetric");
  c.expect(r.flags.minimal_reduced_type, "minimal reduced type");
  for (const auto& [ray, v] : r.reduced_type) c.equal(v, std::size_t{1}, "s(S," + to_string(ray) + ")");

  const auto t = Semigroup::from_gaps(RationalCone::orthant(2), four_gap_gaps());
  c.equal(pseudo_frobenius(t), PointSet{Point{1, 0}, Point{1, 1}, Point{2, 1}}, "PF of the 4-gap GNS");
  const auto rt = classify(t);
  c.expect(rt.flags.maximal_reduced_type, "4-gap GNS has maximal reduced type");
  for (const auto& [ray, v] : rt.reduced_type) c.equal(v, std::size_t{3}, "s(T," + to_string(ray) + ")");
  c.equal(rt.type, std::size_t{3}, "t(T)");
}

void ac06(Check& c) {
  for (Coord h = 2; h <= 6; ++h) {
    const std::vector<Coord> gens{2 * h * (2 * h + 1), (2 * h - 1) * (2 * h + 1),
                                  2 * h * (2 * h + 1) + (2 * h - 1), (2 * h - 1) * 2 * h};
    const auto r = bresinsky(h);
    const auto pf = r.semigroup.pseudo_frobenius();
    Sieve sv(gens, pf.back() + 2);
    const std::string tag = "h=" + std::to_string(h) + " ";
    c.equal(r.pf_formula, sv.pf(gens), tag + "closed form vs sieve");
    c.equal(pf, sv.pf(gens), tag + "PF vs sieve");
    c.equal(r.reduced_type, static_cast<std::size_t>(h), tag + "reduced type");
    c.equal(sv.window(*std::min_element(gens.begin(), gens.end())), static_cast<std::size_t>(h), tag + "sieve reduced type");
    c.equal(pf.size(), static_cast<std::size_t>(4 * h - 3), tag + "|PF|");
  }
  const auto r2 = bresinsky(2);
  c.equal(r2.semigroup.pseudo_frobenius(), std::vector<Coord>{28, 31, 33, 41, 49}, "PF at h=2");
  c.equal(r2.semigroup.frobenius(), Coord{49}, "F at h=2");
}

void ac07(Check& c) {
  auto g = rng(5150);
  int done = 0;
  while (done < 50) {
    const auto a = random_numerical(g, 30), b = random_numerical(g, 30);
    const auto ma = minimal(a), mb = minimal(b);
    Sieve s1(ma, 2000), s2(mb, 2000);
    const Coord mu = uniform(g, 2, 30), lambda = uniform(g, 2, 30);
    if (!s1.contains(mu) || std::count(ma.begin(), ma.end(), mu)) continue;
    if (!s2.contains(lambda) || std::count(mb.begin(), mb.end(), lambda)) continue;
    if (std::gcd(lambda, mu) != 1) continue;
    const auto r = glue(NumericalSemigroup(a), NumericalSemigroup(b), lambda, mu);
    std::vector<Coord> gens;
    for (Coord x : ma) gens.push_back(lambda * x);
    for (Coord x : mb) gens.push_back(mu * x);
    const Coord f = lambda * s1.frobenius() + mu * s2.frobenius() + lambda * mu;
    Sieve s(gens, f + 2);
    const auto direct = s.pf(gens);
    c.equal(r.pf_formula, direct, "gluing PF formula");
    c.equal(r.type_formula, direct.size(), "gluing type formula");
    c.equal(r.frobenius_formula, s.frobenius(), "gluing Frobenius formula");
    c.equal(r.semigroup.pseudo_frobenius(), direct, "glued PF");
    ++done;
  }
  done = 0;
  while (done < 20) {
    const auto gens = minimal(random_numerical(g, 20));
    std::vector<Coord> a(gens.size());
    Coord next = 0, total = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      a[j] = uniform(g, 0, 2);
      next += a[j] * gens[j];
      total += a[j];
    }
    if (total < 2 || std::count(gens.begin(), gens.end(), next)) continue;
    const Coord p = uniform(g, 2, total);
    if (std::gcd(p, next) != 1) continue;
    const auto ext = nice_extension(NumericalSemigroup(gens), a, p);
    std::vector<Coord> new_gens;
    for (Coord x : gens) new_gens.push_back(p * x);
    new_gens.push_back(next);
    Sieve before(gens, 2000);
    Sieve after(new_gens, p * before.frobenius() + p * next + 2);
    const std::size_t rt_before = before.window(gens.front());
    c.equal(after.window(*std::min_element(new_gens.begin(), new_gens.end())), rt_before, "extension reduced type (sieve)");
    c.equal(ext.reduced_type(), rt_before, "extension reduced type");
    ++done;
  }
}

void ac08(Check& c) {
  const auto s = t_graded(NumericalSemigroup({5, 6, 7}), 2);
  PointSet pf, fa;
  for_box(2, 9, [&](const Point& p) {
    if (p[0] + p[1] == 8 || p[0] + p[1] == 9) pf.insert(p);
    if (p[0] + p[1] == 9) fa.insert(p);
  });
  c.equal(pseudo_frobenius(s), pf, "PF");
  c.equal(frobenius_allowable(s), fa, "FA");
  for_box(2, 16, [&](const Point& p) {
    c.expect(s.in_conductor(p) == (p[0] + p[1] >= 10), "conductor at " + to_string(p));
  });
  for (const auto& gens : std::vector<std::vector<Coord>>{{5, 6, 7}, {3, 5}, {4, 6, 9}}) {
    const NumericalSemigroup t(gens);
    Sieve sv(gens, 200);
    const bool t_max = sv.window(t.multiplicity()) == sv.pf(t.min_generators()).size();
    for (std::size_t d : {2u, 3u}) {
      c.equal(classify(t_graded(t, d)).flags.maximal_reduced_type, t_max,
              "maximal reduced type transfer, d=" + std::to_string(d));
    }
  }
}

void ac09(Check& c) {
  const NumericalSemigroup base({5, 7, 8});
  const auto t = thicken(base.model(), 4, 2);
  const auto u = thicken(t, 5, 3);
  c.equal(pseudo_frobenius(t), PointSet{Point{7, 4}, Point{8, 4}, Point{10, 4}}, "PF(Thick_4) as stated");
  c.equal(pseudo_frobenius(u), PointSet{Point{7, 4, 5}, Point{8, 4, 5}, Point{10, 4, 5}}, "PF(Thick_5) as stated");

  // Closed forms, evaluated from the base semigroup's own data.
  PointSet tg, tpf, ug, upf;
  for (Coord h : base.gaps())
    for (Coord i = 0; i <= 4; ++i) tg.insert(Point{h, i});
  for (const auto& h : tg)
    for (Coord j = 0; j <= 5; ++j) ug.insert(Point{h[0], h[1], j});
  for (Coord f : base.pseudo_frobenius()) {
    tpf.insert(Point{f, 4});
    upf.insert(Point{f, 4, 5});
  }
  c.equal(t.gaps(), tg, "gaps of Thick_4");
  c.equal(u.gaps(), ug, "gaps of Thick_5");
  c.equal(pseudo_frobenius(t), tpf, "PF(Thick_4) = 4e_2 + PF(S)");
  c.equal(pseudo_frobenius(u), upf, "PF(Thick_5) = 5e_3 + PF(S')");
  const Coord f = base.frobenius();
  for_box(2, 16, [&](const Point& p) {
    if (t.contains(p)) c.expect(t.in_conductor(p) == (p[1] >= 5 || p[0] > f), "conductor of Thick_4 at " + to_string(p));
  });
  for_box(3, 14, [&](const Point& p) {
    if (u.contains(p))
      c.expect(u.in_conductor(p) == (p[2] >= 6 || p[1] >= 5 || p[0] > f), "conductor of Thick_5 at " + to_string(p));
  });
}

void ac10(Check& c) {
  for (auto [a, r, d] : std::vector<std::tuple<Coord, Coord, std::size_t>>{
           {4, 1, 2}, {6, 1, 2}, {8, 1, 2}, {6, 1, 3}, {7, 2, 2}}) {
    const std::string tag = "a=" + std::to_string(a) + " r=" + std::to_string(r) + " d=" + std::to_string(d) + " ";
    const auto res = s_family(a, r, d);
    const Coord p = (a - 1 + r - 1) / r;
    c.expect(res.semigroup.is_c_semigroup(), tag + "is a C-semigroup");
    c.equal(res.semigroup.min_generators().size(), 2 * d + static_cast<std::size_t>(r) - 1, tag + "e(S)");
    const auto pf = pseudo_frobenius(res.semigroup);
    const auto fa = frobenius_allowable(res.semigroup);
    for (Coord k = 0; k <= p - 2; ++k)
      for (std::size_t i = 0; i + 1 < d; ++i) {
        Point q(d);
        q[i] = a - k * r - 2;
        q[d - 1] = (k + 1) * a - 1;
        c.expect(pf.count(q) && fa.count(q), tag + to_string(q) + " in PF and FA");
      }
    c.expect(pf.size() >= (d - 1) * static_cast<std::size_t>(p - 1), tag + "type bound");
  }
}

bool intersection_matches(const Semigroup& s, const std::vector<Semigroup>& comps, Coord side) {
  bool ok = true;
  for_box(s.dim(), side, [&](const Point& p) {
    bool all = true;
    for (const auto& c : comps) all = all && c.contains(p);
    ok = ok && all == s.contains(p);
  });
  return ok;
}

void ac11(Check& c) {
  const auto s = Semigroup::from_gaps(RationalCone::orthant(2), two_special_gaps());
  const auto r = decompose(s);
  std::set<PointSet> got;
  for (const auto& comp : r.components) got.insert(comp.gaps());
  c.equal(r.components.size(), std::size_t{2}, "component count");
  c.expect(got == std::set<PointSet>{PointSet{Point{0, 1}, Point{1, 0}, Point{1, 2}},
                                     PointSet{Point{0, 1}, Point{1, 0}, Point{2, 1}}},
           "components match S1, S2");
  for (const auto& comp : r.components) c.equal(special_gaps(comp).size(), std::size_t{1}, "component irreducible");
  c.expect(verify_decomposition(s, r.components).verified(), "decomposition verified");
  c.expect(intersection_matches(s, r.components, 6), "intersection equals S");
  for (Coord k : {3, 5, 8}) {
    PointSet a;
    for (Coord i = 0; i < k; ++i) a.insert(Point{i + 1, k - i});
    const auto t = antichain_semigroup(RationalCone::orthant(2), a);
    const auto rt = decompose(t);
    const std::string tag = "k=" + std::to_string(k) + " ";
    c.equal(maximal_gaps_cone(t).size(), static_cast<std::size_t>(k), tag + "incomparable maximal gaps");
    c.expect(rt.components.size() >= static_cast<std::size_t>(k), tag + "at least k components");
    c.expect(verify_decomposition(t, rt.components).verified(), tag + "decomposition verified");
    c.expect(intersection_matches(t, rt.components, k + 3), tag + "intersection equals S");
  }
}

void ac12(Check& c) {
  auto g = rng(8675309);
  for (int i = 0; i < 200; ++i) {
    const auto model = random_antichain_model(g);
    const auto& s = model.semigroup;
    const std::string tag = to_string(s.gaps()) + " ";
    Coord m = 0;
    for (const auto& h : s.gaps())
      for (std::size_t j = 0; j < h.dim(); ++j) m = std::max(m, h[j]);
    for (const auto& x : s.min_generators())
      for (std::size_t j = 0; j < x.dim(); ++j) m = std::max(m, x[j]);
    const auto b = oracle::cube(s.dim(), m + 3);
    const auto gens = to_vecs(s.min_generators());
    const auto rays = to_vecs(model.rays);
    const auto pf = pseudo_frobenius(s);
    c.equal(from_vecs(oracle::oracle_gaps(gens, rays, b)), s.gaps(), tag + "oracle gaps");
    c.equal(from_vecs(oracle::oracle_pf(gens, rays, b)), pf, tag + "oracle PF");

    const auto fa = frobenius_allowable(s), mx = maximal_gaps_cone(s), sg = special_gaps(s);
    c.expect(subset(fa, mx) && subset(mx, sg) && subset(sg, pf), tag + "containment chain");

    const auto q = quasi_irreducible_conditions(s);
    c.expect(q.maximals_equal_sg == q.pf_or_double_maximal && q.maximals_equal_sg == q.gaps_below_maximal,
             tag + "quasi-irreducible conditions agree");
    const auto lo = minimal_reduced_type_sides(s), hi = maximal_reduced_type_sides(s);
    c.expect(lo.direct == lo.characterization, tag + "minimal reduced type sides agree");
    c.expect(hi.direct == hi.characterization, tag + "maximal reduced type sides agree");

    for (const auto& x : s.min_generators()) {
      PointSet shifted;
      for (const auto& h : pf) shifted.insert(h + x);
      c.equal(maximal_apery_wrt_point(s, x), shifted, tag + "Maximals Ap(S," + to_string(x) + ") = PF + x");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::pair<const char*, void (*)(Check&)>>> criteria{
      {"AC01", {"cone in N^3 from 11 generators: gaps, FA, Maximals, SG, PF", ac01}},
      {"AC02", {"cone spanned by (1,2),(3,1): FA, Maximals, SG, PF and the adjoined chain", ac02}},
      {"AC03", {"Apery set of <(0,4),(2,0),(1,1),(1,2)> and the point (3,4)", ac03}},
      {"AC04", {"Apery set, conductor and reduced type of the 13-generator semigroup", ac04}},
      {"AC05", {"almost symmetric 41-gap GNS and the 4-gap GNS of maximal reduced type", ac05}},
      {"AC06", {"Bresinsky semigroups h = 2..6", ac06}},
      {"AC07", {"50 random gluings and 20 random nice extensions", ac07}},
      {"AC08", {"<5,6,7>-graded GNS and maximal reduced type transfer", ac08}},
      {"AC09", {"thickenings of <5,7,8>", ac09}},
      {"AC10", {"S(a,r) family: embedding dimension, witnesses, type bound", ac10}},
      {"AC11", {"decompositions: two special gaps and antichains k = 3,5,8", ac11}},
      {"AC12", {"property suite on 200 random antichain semigroups", ac12}},
  };
  int failed = 0;
  for (const auto& [id, entry] : criteria) {
    Check c;
    try {
      entry.second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures().empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << " " << entry.first << "\n";
    const std::size_t shown = std::min<std::size_t>(c.failures().size(), 5);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "       " << c.failures()[i] << "\n";
    if (c.failures().size() > shown) std::cout << "       ... " << c.failures().size() - shown << " more\n";
  }
  std::cout << (12 - failed) << "/12 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
