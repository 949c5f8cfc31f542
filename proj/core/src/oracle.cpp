#include "csg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace csg::oracle {

namespace {

__extension__ typedef __int128 I128;

I128 det(const std::vector<std::vector<I128>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  I128 total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<I128>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<I128> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    I128 term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

bool nonneg(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
}

long long sum(const Vec& v) {
  long long s = 0;
  for (long long x : v) s += x;
  return s;
}

// Cramer's rule for every linearly independent d-subset B of the rays:
// p = B lambda with lambda_c = det(B with column c replaced by p) / det(B).
// The numerators are linear in p, so each subset stores det(B) and the
// cofactor rows once.
class ConeTester {
 public:
  explicit ConeTester(const std::vector<Vec>& rays) {
    if (rays.empty()) return;
    d_ = rays.front().size();
    const std::size_t n = rays.size();
    if (n < d_) return;
    std::vector<std::size_t> idx(d_);
    for (std::size_t i = 0; i < d_; ++i) idx[i] = i;
    while (true) {
      std::vector<std::vector<I128>> m(d_, std::vector<I128>(d_));
      for (std::size_t r = 0; r < d_; ++r) {
        for (std::size_t c = 0; c < d_; ++c) m[r][c] = rays[idx[c]][r];
      }
      const I128 D = det(m);
      if (D != 0) {
        Basis b{D, std::vector<std::vector<I128>>(d_, std::vector<I128>(d_))};
        // cof[c][r] = coefficient of p_r in det(m with column c replaced by p).
        for (std::size_t c = 0; c < d_; ++c) {
          for (std::size_t r = 0; r < d_; ++r) {
            auto mc = m;
            for (std::size_t k = 0; k < d_; ++k) mc[k][c] = (k == r) ? 1 : 0;
            b.cof[c][r] = det(mc);
          }
        }
        bases_.push_back(std::move(b));
      }
      std::size_t i = d_;
      while (i > 0 && idx[i - 1] == n - d_ + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < d_; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  bool contains(const Vec& p) const {
    for (const Basis& b : bases_) {
      bool ok = true;
      for (std::size_t c = 0; c < d_ && ok; ++c) {
        I128 num = 0;
        for (std::size_t r = 0; r < d_; ++r) num += b.cof[c][r] * p[r];
        ok = (b.det > 0) ? num >= 0 : num <= 0;
      }
      if (ok) return true;
    }
    return false;
  }

 private:
  struct Basis {
    I128 det;
    std::vector<std::vector<I128>> cof;
  };
  std::size_t d_ = 0;
  std::vector<Basis> bases_;
};

class Searcher {
 public:
  explicit Searcher(const std::vector<Vec>& gens) : gens_(gens) {}

  bool member(const Vec& p) {
    if (std::all_of(p.begin(), p.end(), [](long long x) { return x == 0; })) return true;
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    bool found = false;
    for (const Vec& g : gens_) {
      Vec q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] - g[i];
      if (nonneg(q) && member(q)) {
        found = true;
        break;
      }
    }
    memo_[p] = found;
    return found;
  }

 private:
  const std::vector<Vec>& gens_;
  std::map<Vec, bool> memo_;
};

void check_box(const std::vector<Vec>& gens, const BoundedBox& box) {
  for (long long u : box.upper) {
    if (u <= 0) throw OracleError(OracleErrorKind::InvalidInput, "box bounds must be positive");
  }
  for (const Vec& g : gens) {
    if (g.size() != box.upper.size()) {
      throw OracleError(OracleErrorKind::InvalidInput, "generator dimension differs from box");
    }
    if (!nonneg(g)) throw OracleError(OracleErrorKind::InvalidInput, "generators must be in N^d");
    if (sum(g) > box.degree_cap) {
      throw OracleError(OracleErrorKind::InvalidInput, "degree cap below a generator degree");
    }
  }
}

bool in_box(const Vec& p, const BoundedBox& box) {
  if (p.size() != box.upper.size() || !nonneg(p) || sum(p) > box.degree_cap) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > box.upper[i]) return false;
  }
  return true;
}

void for_each_point(const BoundedBox& box, const std::function<void(const Vec&)>& fn) {
  const std::size_t d = box.upper.size();
  Vec p(d, 0);
  while (true) {
    if (sum(p) <= box.degree_cap) fn(p);
    std::size_t j = 0;
    while (j < d) {
      if (p[j] < box.upper[j]) {
        ++p[j];
        break;
      }
      p[j] = 0;
      ++j;
    }
    if (j == d) return;
  }
}

}  // namespace

bool oracle_membership(const std::vector<Vec>& generators, const Vec& p, const BoundedBox& box) {
  check_box(generators, box);
  if (!in_box(p, box)) throw OracleError(OracleErrorKind::OutOfBox, "point outside the box");
  Searcher s(generators);
  return s.member(p);
}

bool oracle_in_cone(const std::vector<Vec>& rays, const Vec& p) {
  return ConeTester(rays).contains(p);
}

std::set<Vec> oracle_gaps(const std::vector<Vec>& generators, const std::vector<Vec>& rays,
                          const BoundedBox& box) {
  check_box(generators, box);
  Searcher s(generators);
  const ConeTester cone(rays);
  std::set<Vec> gaps;
  for_each_point(box, [&](const Vec& p) {
    if (!cone.contains(p) || s.member(p)) return;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == box.upper[i]) throw OracleError(OracleErrorKind::BoxTooSmall, "gap on the box boundary");
    }
    if (sum(p) == box.degree_cap) throw OracleError(OracleErrorKind::BoxTooSmall, "gap on the degree cap");
    gaps.insert(p);
  });
  return gaps;
}

std::set<Vec> oracle_pf(const std::vector<Vec>& generators, const std::vector<Vec>& rays,
                        const BoundedBox& box) {
  const std::set<Vec> gaps = oracle_gaps(generators, rays, box);
  Searcher s(generators);
  std::set<Vec> pf;
  for (const Vec& h : gaps) {
    bool ok = true;
    for (const Vec& g : generators) {
      Vec q(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) q[i] = h[i] + g[i];
      if (!s.member(q)) {
        ok = false;
        break;
      }
    }
    if (ok) pf.insert(h);
  }
  return pf;
}

std::set<Vec> oracle_gaps(const std::vector<Vec>& generators, const BoundedBox& box) {
  return oracle_gaps(generators, generators, box);
}

std::set<Vec> oracle_pf(const std::vector<Vec>& generators, const BoundedBox& box) {
  return oracle_pf(generators, generators, box);
}

long long oracle_parallelepiped_count(const std::vector<Vec>& rays) {
  const std::size_t d = rays.size();
  std::vector<std::vector<I128>> m(d, std::vector<I128>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m[r][c] = rays[c][r];
  }
  const I128 D = det(m);
  if (D == 0) throw OracleError(OracleErrorKind::InvalidInput, "singular rays");
  Vec lo(d, 0), hi(d, 0);
  for (const Vec& r : rays) {
    for (std::size_t j = 0; j < d; ++j) (r[j] < 0 ? lo[j] : hi[j]) += r[j];
  }
  long long count = 0;
  Vec p = lo;
  while (true) {
    bool inside = true;
    for (std::size_t c = 0; c < d && inside; ++c) {
      auto mc = m;
      for (std::size_t r = 0; r < d; ++r) mc[r][c] = p[r];
      const I128 Dc = det(mc);
      // 0 <= Dc / D < 1
      inside = D > 0 ? (Dc >= 0 && Dc < D) : (Dc <= 0 && Dc > D);
    }
    if (inside) ++count;
    std::size_t j = 0;
    while (j < d) {
      if (p[j] < hi[j]) {
        ++p[j];
        break;
      }
      p[j] = lo[j];
      ++j;
    }
    if (j == d) return count;
  }
}

BoundedBox cube(std::size_t dim, long long side) {
  return BoundedBox{Vec(dim, side), static_cast<long long>(dim) * side};
}

}  // namespace csg::oracle
