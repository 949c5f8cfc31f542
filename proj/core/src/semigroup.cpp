#include "csg/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "box.hpp"
#include "csg/linalg.hpp"

namespace csg {

namespace {

std::vector<std::vector<Coord>> witness_of(std::initializer_list<Point> pts) {
  std::vector<std::vector<Coord>> w;
  for (const Point& p : pts) w.push_back(p.coords());
  return w;
}

// Memoized decision of p in <generators>, pruned by the cone: every partial
// sum of generators stays inside it.
class GeneratorMembership {
 public:
  GeneratorMembership(const std::vector<Point>& gens, const RationalCone& cone)
      : gens_(gens), cone_(cone) {}

  bool contains(const Point& p) {
    if (p.is_zero()) return true;
    if (!p.is_nonnegative() || !cone_.contains(p)) return false;
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    bool found = false;
    for (const Point& g : gens_) {
      Point q = p - g;
      if (q.is_nonnegative() && contains(q)) {
        found = true;
        break;
      }
    }
    memo_.emplace(p, found);
    return found;
  }

 private:
  const std::vector<Point>& gens_;
  const RationalCone& cone_;
  std::unordered_map<Point, bool, PointHash> memo_;
};

bool dominates_some(const Point& step, const std::vector<Point>& steps) {
  for (const Point& m : steps) {
    if (m.dominated_by(step)) return true;
  }
  return false;
}

}  // namespace

struct Semigroup::Impl {
  std::size_t d = 0;
  RationalCone cone;
  PointSet min_gens;
  std::vector<Point> E;
  bool from_gaps = false;
  bool is_c = false;
  PointSet gaps;
  Coord bound = kDefaultSearchBound;

  bool simplicial = false;
  linalg::Matrix adj;
  Coord sign = 1;
  Coord D = 1;
  std::map<Point, ResidueClass> classes;

  PointSet apery;
  Point certificate;

  void setup_lattice() {
    simplicial = cone.is_simplicial();
    if (!simplicial) return;
    linalg::Matrix m = linalg::transpose(E);
    Coord det = linalg::determinant(m);
    if (det == 0) fail(ErrorKind::InternalInconsistency, "minimal extremal rays are dependent");
    adj = linalg::adjugate(m);
    sign = det > 0 ? 1 : -1;
    D = det > 0 ? det : -det;
  }

  // Residue of p modulo the lattice of E, and floor of its E-coordinates.
  void split(const Point& p, Point& key, Point& step) const {
    key = Point(d);
    step = Point(d);
    for (std::size_t i = 0; i < d; ++i) {
      Coord w = arith::mul(sign, linalg::dot(adj[i], p));
      step[i] = arith::floor_div(w, D);
      key[i] = w - step[i] * D;
    }
  }

  Point key_of(const Point& p) const {
    Point key, step;
    split(p, key, step);
    return key;
  }

  Point combine(const Point& base, const Point& step) const {
    Point p = base;
    for (std::size_t i = 0; i < d; ++i) p += E[i] * step[i];
    return p;
  }

  bool class_member(const Point& p) const {
    require_dim(p, d, "semigroup membership");
    if (!p.is_nonnegative() || !cone.contains(p)) return false;
    Point key, step;
    split(p, key, step);
    auto it = classes.find(key);
    if (it == classes.end()) return false;
    return dominates_some(step, it->second.minimal_steps);
  }

  bool member(const Point& p) const {
    if (from_gaps) {
      require_dim(p, d, "semigroup membership");
      return p.is_nonnegative() && cone.contains(p) && !gaps.count(p);
    }
    return class_member(p);
  }

  bool in_conductor(const Point& p) const {
    if (!member(p)) return false;
    if (simplicial) {
      for (const auto& [key, cls] : classes) {
        if (!member(p + cls.base)) return false;
      }
      return true;
    }
    for (const Point& h : gaps) {
      if (cone.contains(h - p)) return false;
    }
    return true;
  }

  void record_class(const Point& a) {
    Point key, step;
    split(a, key, step);
    ResidueClass& cls = classes[key];
    Point base = a;
    for (std::size_t i = 0; i < d; ++i) base = base - E[i] * step[i];
    if (cls.minimal_steps.empty()) {
      cls.base = base;
    } else if (cls.base != base) {
      fail(ErrorKind::InternalInconsistency, "residue class with two bases");
    }
    cls.minimal_steps.push_back(step);
  }

  void check_class_antichains() const {
    for (const auto& [key, cls] : classes) {
      const auto& st = cls.minimal_steps;
      for (std::size_t i = 0; i < st.size(); ++i) {
        for (std::size_t j = 0; j < st.size(); ++j) {
          if (i != j && st[i].dominated_by(st[j])) {
            fail(ErrorKind::InternalInconsistency,
                 "comparable Apery elements in one residue class",
                 witness_of({combine(cls.base, st[i]), combine(cls.base, st[j])}));
          }
        }
      }
    }
  }

  // Smallest k with k * (sum of E) dominating a minimal step in every class.
  void certificate_from_classes() {
    Coord k = 0;
    for (const auto& [key, cls] : classes) {
      Coord best = -1;
      for (const Point& m : cls.minimal_steps) {
        Coord mx = 0;
        for (std::size_t i = 0; i < d; ++i) mx = std::max(mx, m[i]);
        if (best < 0 || mx < best) best = mx;
      }
      k = std::max(k, best);
    }
    Point sum(d);
    for (const Point& n : E) sum += n;
    certificate = sum * k;
  }

  void certificate_from_gaps() {
    Point sum(d);
    for (const Point& n : E) sum += n;
    Point c(d);
    while (true) {
      bool dominated = false;
      for (const Point& h : gaps) {
        if (cone.contains(h - c)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) break;
      c += sum;
    }
    certificate = c;
  }

  void check_certificate() const {
    if (!is_c) return;
    for (const Point& h : gaps) {
      if (cone.contains(h - certificate)) {
        fail(ErrorKind::InternalInconsistency, "conductor certificate below a gap",
             witness_of({certificate, h}));
      }
    }
    if (simplicial) {
      for (const Point& f : parallelepiped_lattice_points(E)) {
        if (!member(certificate + f)) {
          fail(ErrorKind::InternalInconsistency, "conductor certificate fails on a class",
               witness_of({certificate, f}));
        }
      }
    }
  }
};

Semigroup Semigroup::build(const Presentation& p) {
  if (const auto* g = std::get_if<GeneratorsPresentation>(&p)) {
    return from_generators(g->generators, g->search_bound);
  }
  const auto& gs = std::get<GapSetPresentation>(p);
  return from_gaps(gs.cone, gs.gaps);
}

Semigroup Semigroup::from_generators(const std::vector<Point>& input, Coord bound) {
  if (input.empty()) fail(ErrorKind::InvalidInput, "no generators given");
  if (bound <= 0) fail(ErrorKind::InvalidInput, "search bound must be positive");
  const std::size_t d = input.front().dim();
  if (d == 0) fail(ErrorKind::DimensionMismatch, "generators must have dimension >= 1");
  for (const Point& g : input) {
    require_dim(g, d, "generator");
    if (!g.is_nonnegative()) {
      fail(ErrorKind::InvalidInput, "generators must lie in N^d", {g.coords()});
    }
    if (g.is_zero()) fail(ErrorKind::InvalidInput, "generators must be nonzero");
  }
  PointSet uniq(input.begin(), input.end());

  auto impl = std::make_shared<Impl>();
  impl->d = d;
  impl->bound = bound;
  impl->cone = RationalCone::from_rays(std::vector<Point>(uniq.begin(), uniq.end()));
  if (!impl->cone.is_simplicial()) {
    std::vector<std::vector<Coord>> w;
    for (const Point& r : impl->cone.rays()) w.push_back(r.coords());
    fail(ErrorKind::NonSimplicialCone,
         "generated cone has " + std::to_string(impl->cone.rays().size()) +
             " extremal rays in dimension " + std::to_string(d),
         w);
  }

  std::vector<Point> by_degree(uniq.begin(), uniq.end());
  std::stable_sort(by_degree.begin(), by_degree.end(), [](const Point& a, const Point& b) {
    return a.degree() < b.degree();
  });
  std::vector<Point> kept;
  for (const Point& g : by_degree) {
    GeneratorMembership mem(kept, impl->cone);
    if (!mem.contains(g)) kept.push_back(g);
  }
  impl->min_gens = PointSet(kept.begin(), kept.end());

  for (const Point& ray : impl->cone.rays()) {
    const Point* best = nullptr;
    for (const Point& g : kept) {
      if (linalg::primitive(g) == ray && (!best || g.degree() < best->degree())) best = &g;
    }
    if (!best) fail(ErrorKind::InternalInconsistency, "extremal ray without a generator");
    impl->E.push_back(*best);
  }
  impl->setup_lattice();

  Coord sum_deg = 0, max_deg = 0;
  for (const Point& n : impl->E) {
    sum_deg = arith::add(sum_deg, n.degree());
    max_deg = std::max(max_deg, n.degree());
  }
  const Coord apery_cap = std::max(sum_deg, arith::add(bound, max_deg));

  std::vector<Point> steps_gens;
  for (const Point& g : kept) {
    if (std::find(impl->E.begin(), impl->E.end(), g) == impl->E.end()) steps_gens.push_back(g);
  }
  GeneratorMembership mem(kept, impl->cone);
  std::unordered_set<Point, PointHash> seen;
  std::deque<Point> frontier;
  const Point zero = Point::zero(d);
  impl->apery.insert(zero);
  frontier.push_back(zero);
  seen.insert(zero);
  while (!frontier.empty()) {
    Point a = frontier.front();
    frontier.pop_front();
    for (const Point& g : steps_gens) {
      Point c = a + g;
      if (!seen.insert(c).second) continue;
      bool in_ap = true;
      for (const Point& n : impl->E) {
        if (mem.contains(c - n)) {
          in_ap = false;
          break;
        }
      }
      if (!in_ap) continue;
      if (c.degree() > apery_cap) {
        fail(ErrorKind::GapBoundExceeded,
             "Apery element of degree " + std::to_string(c.degree()) +
                 " exceeds the search bound " + std::to_string(bound),
             {c.coords()});
      }
      impl->apery.insert(c);
      frontier.push_back(c);
    }
  }

  for (const Point& a : impl->apery) impl->record_class(a);
  impl->check_class_antichains();

  bool is_c = static_cast<Coord>(impl->classes.size()) == impl->D;
  std::vector<std::pair<const ResidueClass*, Point>> axis_caps;
  for (const auto& [key, cls] : impl->classes) {
    Point caps(d);
    for (std::size_t i = 0; i < d && is_c; ++i) {
      bool found = false;
      for (const Point& m : cls.minimal_steps) {
        bool on_axis = true;
        for (std::size_t j = 0; j < d; ++j) {
          if (j != i && m[j] != 0) on_axis = false;
        }
        if (on_axis) {
          caps[i] = m[i];
          found = true;
        }
      }
      if (!found) is_c = false;
    }
    axis_caps.emplace_back(&cls, caps);
  }
  impl->is_c = is_c;

  if (is_c) {
    for (const auto& [cls, caps] : axis_caps) {
      Point hi(d);
      bool empty_box = false;
      for (std::size_t i = 0; i < d; ++i) {
        hi[i] = caps[i] - 1;
        if (hi[i] < 0) empty_box = true;
      }
      if (empty_box) continue;
      detail::for_each_in_box(Point(d), hi, [&](const Point& step) {
        if (!dominates_some(step, cls->minimal_steps)) {
          Point h = impl->combine(cls->base, step);
          if (h.degree() > bound) {
            fail(ErrorKind::GapBoundExceeded,
                 "gap of degree " + std::to_string(h.degree()) + " exceeds the search bound " +
                     std::to_string(bound),
                 {h.coords()});
          }
          impl->gaps.insert(h);
        }
        return true;
      });
    }
  }

  impl->certificate_from_classes();
  impl->check_certificate();
  return Semigroup(std::move(impl));
}

Semigroup Semigroup::from_gaps(const RationalCone& cone, const PointSet& gaps) {
  const std::size_t d = cone.dim();
  if (!cone.in_orthant()) {
    fail(ErrorKind::InvalidInput, "the cone of a gap-set presentation must lie in N^d");
  }
  for (const Point& g : gaps) {
    require_dim(g, d, "gap");
    if (!g.is_nonnegative()) fail(ErrorKind::InvalidInput, "gaps must lie in N^d", {g.coords()});
    if (g.is_zero()) fail(ErrorKind::InvalidInput, "0 cannot be a gap");
    if (!cone.contains(g)) fail(ErrorKind::InvalidInput, "gap outside the cone", {g.coords()});
  }
  for (const Point& g : gaps) {
    detail::for_each_in_box(Point(d), g, [&](const Point& a) {
      if (a.is_zero() || a == g) return true;
      Point b = g - a;
      if (cone.contains(a) && cone.contains(b) && !gaps.count(a) && !gaps.count(b)) {
        fail(ErrorKind::NotASemigroup,
             a.str() + " + " + b.str() + " = " + g.str() + " is a gap", witness_of({a, b, g}));
      }
      return true;
    });
  }

  auto impl = std::make_shared<Impl>();
  impl->d = d;
  impl->cone = cone;
  impl->from_gaps = true;
  impl->is_c = true;
  impl->gaps = gaps;
  Coord gap_deg = 0;
  for (const Point& g : gaps) gap_deg = std::max(gap_deg, g.degree());
  impl->bound = std::max(gap_deg, kDefaultSearchBound);

  for (const Point& ray : cone.rays()) {
    Coord k = 1;
    while (gaps.count(ray * k)) ++k;
    impl->E.push_back(ray * k);
  }
  impl->setup_lattice();

  if (impl->simplicial) {
    std::map<Point, Point> class_caps;
    for (const Point& g : gaps) {
      Point key, step;
      impl->split(g, key, step);
      auto [it, inserted] = class_caps.emplace(key, step);
      if (!inserted) {
        for (std::size_t i = 0; i < d; ++i) it->second[i] = std::max(it->second[i], step[i]);
      }
    }
    for (const Point& f : parallelepiped_lattice_points(impl->E)) {
      Point key = impl->key_of(f);
      Point hi(d);
      auto it = class_caps.find(key);
      for (std::size_t i = 0; i < d; ++i) hi[i] = (it == class_caps.end() ? 0 : it->second[i]) + 1;
      ResidueClass cls;
      cls.base = f;
      detail::for_each_in_box(Point(d), hi, [&](const Point& step) {
        Point p = impl->combine(f, step);
        if (!impl->member(p)) return true;
        for (std::size_t i = 0; i < d; ++i) {
          if (step[i] > 0 && impl->member(p - impl->E[i])) return true;
        }
        cls.minimal_steps.push_back(step);
        impl->apery.insert(p);
        return true;
      });
      impl->classes.emplace(key, std::move(cls));
    }
    impl->check_class_antichains();
  } else {
    Coord sum_deg = 0, max_deg = 0;
    for (const Point& n : impl->E) {
      sum_deg = arith::add(sum_deg, n.degree());
      max_deg = std::max(max_deg, n.degree());
    }
    const Coord limit = std::max(sum_deg, arith::add(gap_deg, max_deg));
    detail::for_each_up_to_degree(d, limit, [&](const Point& p) {
      if (!impl->member(p)) return;
      for (const Point& n : impl->E) {
        if (impl->member(p - n)) return;
      }
      impl->apery.insert(p);
    });
  }

  impl->min_gens.insert(impl->E.begin(), impl->E.end());
  for (const Point& a : impl->apery) {
    if (a.is_zero()) continue;
    bool reducible = !detail::for_each_in_box(Point(d), a, [&](const Point& b) {
      if (b.is_zero() || b == a) return true;
      return !(impl->member(b) && impl->member(a - b));
    });
    if (!reducible) impl->min_gens.insert(a);
  }

  if (impl->simplicial) impl->certificate_from_classes();
  else impl->certificate_from_gaps();
  impl->check_certificate();
  return Semigroup(std::move(impl));
}

std::size_t Semigroup::dim() const { return impl_->d; }
const RationalCone& Semigroup::cone() const { return impl_->cone; }
const PointSet& Semigroup::min_generators() const { return impl_->min_gens; }
const std::vector<Point>& Semigroup::extremal_rays() const { return impl_->E; }
bool Semigroup::is_c_semigroup() const { return impl_->is_c; }
bool Semigroup::is_simplicial() const { return impl_->simplicial; }
Coord Semigroup::search_bound() const { return impl_->bound; }

bool Semigroup::has_gaps() const { return !gaps().empty(); }

const PointSet& Semigroup::gaps() const {
  if (!impl_->is_c) {
    fail(ErrorKind::NotACSemigroup, "the semigroup has infinitely many gaps in its cone");
  }
  return impl_->gaps;
}

bool Semigroup::contains(const Point& p) const { return impl_->member(p); }

bool Semigroup::contains_by_classes(const Point& p) const {
  if (!impl_->simplicial) fail(ErrorKind::NonSimplicialCone, "no residue classes for this cone");
  return impl_->class_member(p);
}

const std::map<Point, ResidueClass>& Semigroup::class_table() const { return impl_->classes; }

const Point& Semigroup::conductor_certificate() const { return impl_->certificate; }

bool Semigroup::in_conductor(const Point& p) const {
  require_dim(p, impl_->d, "conductor membership");
  return impl_->in_conductor(p);
}

PointSet Semigroup::conductor_minimal_elements() const {
  const Impl& s = *impl_;
  if (!s.simplicial) fail(ErrorKind::NonSimplicialCone, "conductor generators need a simplicial cone");
  Coord M = 0;
  for (const auto& [key, cls] : s.classes) {
    for (const Point& m : cls.minimal_steps) {
      for (std::size_t i = 0; i < s.d; ++i) M = std::max(M, m[i]);
    }
  }
  Point hi(s.d);
  for (std::size_t i = 0; i < s.d; ++i) hi[i] = M;
  PointSet members;
  for (const auto& [key, cls] : s.classes) {
    detail::for_each_in_box(Point(s.d), hi, [&](const Point& step) {
      Point p = s.combine(cls.base, step);
      if (s.in_conductor(p)) members.insert(p);
      return true;
    });
  }
  auto normalization = [impl = impl_](const Point& x) {
    return x.is_nonnegative() && impl->cone.contains(x) && impl->classes.count(impl->key_of(x));
  };
  return minimals(members, PartialOrder::semigroup(normalization));
}

AperySet Semigroup::apery_wrt_E() const {
  AperySet out;
  out.base = impl_->E;
  out.elements = impl_->apery;
  out.maximal_elements = maximals(out.elements, order());
  return out;
}

PartialOrder Semigroup::order() const {
  return PartialOrder::semigroup([impl = impl_](const Point& p) { return impl->member(p); });
}

PointSet apery_wrt_E_by_scan(const Semigroup& s) {
  if (!s.is_simplicial()) fail(ErrorKind::NonSimplicialCone, "scan needs a simplicial cone");
  const std::size_t d = s.dim();
  const auto& E = s.extremal_rays();
  linalg::Matrix m = linalg::transpose(E);
  const Coord det = linalg::determinant(m);
  const linalg::Matrix adj = linalg::adjugate(m);
  // For an element f + sum k_i n_i with k_i >= 1, removing n_i lands on a gap,
  // so k_i is at most one more than the largest E-coordinate of a gap.
  Point hi(d);
  for (std::size_t i = 0; i < d; ++i) hi[i] = 1;
  for (const Point& h : s.gaps()) {
    for (std::size_t i = 0; i < d; ++i) {
      Coord w = linalg::dot(adj[i], h);
      if (det < 0) w = -w;
      hi[i] = std::max(hi[i], arith::floor_div(w, det < 0 ? -det : det) + 1);
    }
  }
  PointSet out;
  for (const Point& f : parallelepiped_lattice_points(E)) {
    detail::for_each_in_box(Point(d), hi, [&](const Point& k) {
      Point p = f;
      for (std::size_t i = 0; i < d; ++i) p += E[i] * k[i];
      if (!s.contains(p)) return true;
      for (const Point& n : E) {
        if (s.contains(p - n)) return true;
      }
      out.insert(p);
      return true;
    });
  }
  return out;
}

PointSet maximal_apery_wrt_point(const Semigroup& s, const Point& x) {
  require_dim(x, s.dim(), "Apery shift");
  if (x.is_zero()) fail(ErrorKind::ZeroShift, "shift must be nonzero");
  if (!s.contains(x)) fail(ErrorKind::NotInSemigroup, "shift is not in the semigroup", {x.coords()});
  const PointSet& H = s.gaps();
  if (H.empty()) fail(ErrorKind::NoGaps, "maximal Apery elements need a gap");
  const PointSet& gens = s.min_generators();

  PointSet by_candidates;
  for (const Point& h : H) {
    Point m = h + x;
    if (!s.contains(m)) continue;
    bool maximal = std::all_of(gens.begin(), gens.end(),
                               [&](const Point& g) { return s.contains(m + g - x); });
    if (maximal) by_candidates.insert(m);
  }

  Point hi = x;
  for (const Point& h : H) {
    for (std::size_t i = 0; i < s.dim(); ++i) hi[i] = std::max(hi[i], arith::add(h[i], x[i]));
  }
  PointSet by_scan;
  detail::for_each_in_box(Point(s.dim()), hi, [&](const Point& m) {
    if (!s.contains(m) || s.contains(m - x)) return true;
    for (const Point& g : gens) {
      if (!s.contains(m + g - x)) return true;
    }
    by_scan.insert(m);
    return true;
  });

  if (by_candidates != by_scan) {
    fail(ErrorKind::InternalInconsistency,
         "maximal Apery elements disagree: candidates " + to_string(by_candidates) + " vs scan " +
             to_string(by_scan));
  }
  return by_candidates;
}

}  // namespace csg
