#pragma once

#include <random>
#include <set>
#include <vector>

#include "csg/csg.hpp"
#include "csg/oracle.hpp"

namespace csg::test {

inline oracle::Vec to_vec(const Point& p) {
  return oracle::Vec(p.coords().begin(), p.coords().end());
}

inline Point from_vec(const oracle::Vec& v) {
  return Point(std::vector<Coord>(v.begin(), v.end()));
}

inline std::vector<oracle::Vec> to_vecs(const PointSet& s) {
  std::vector<oracle::Vec> out;
  for (const Point& p : s) out.push_back(to_vec(p));
  return out;
}

inline PointSet from_vecs(const std::set<oracle::Vec>& s) {
  PointSet out;
  for (const auto& v : s) out.insert(from_vec(v));
  return out;
}

inline std::vector<oracle::Vec> to_vecs(const std::vector<Point>& s) {
  std::vector<oracle::Vec> out;
  for (const Point& p : s) out.push_back(to_vec(p));
  return out;
}

inline std::vector<oracle::Vec> orthant_rays(std::size_t d) {
  std::vector<oracle::Vec> out(d, oracle::Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) out[i][i] = 1;
  return out;
}

inline PointSet pts(std::initializer_list<Point> l) { return PointSet(l); }

// Box of side `side` in every coordinate, degree unbounded in practice.
inline oracle::BoundedBox box(std::size_t dim, long long side) { return oracle::cube(dim, side); }

// Numerical semigroup read off the definition by sieving up to `limit`.
struct Sieve {
  std::vector<bool> in;
  Sieve(const std::vector<Coord>& gens, Coord limit) : in(static_cast<std::size_t>(limit) + 1, false) {
    in[0] = true;
    for (Coord n = 1; n <= limit; ++n)
      for (Coord g : gens)
        if (g <= n && in[static_cast<std::size_t>(n - g)]) {
          in[static_cast<std::size_t>(n)] = true;
          break;
        }
  }
  bool contains(Coord n) const { return n >= 0 && (n >= static_cast<Coord>(in.size()) || in[static_cast<std::size_t>(n)]); }
  std::vector<Coord> gaps() const {
    std::vector<Coord> out;
    for (std::size_t n = 0; n < in.size(); ++n)
      if (!in[n]) out.push_back(static_cast<Coord>(n));
    return out;
  }
  Coord frobenius() const {
    const auto g = gaps();
    return g.empty() ? -1 : g.back();
  }
  std::vector<Coord> pf(const std::vector<Coord>& gens) const {
    std::vector<Coord> out;
    for (Coord h : gaps()) {
      bool ok = true;
      for (Coord g : gens) ok = ok && contains(h + g);
      if (ok) out.push_back(h);
    }
    return out;
  }
  // |H ∩ [F - m + 1, F]| for multiplicity m.
  std::size_t window(Coord m) const {
    const Coord f = frobenius();
    std::size_t c = 0;
    for (Coord h : gaps()) c += (h >= f - m + 1) ? 1 : 0;
    return c;
  }
};

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline long long uniform(std::mt19937_64& g, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(g);
}

}  // namespace csg::test
