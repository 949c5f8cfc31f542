#pragma once

#include "csg/point.hpp"

namespace csg::detail {

// Calls fn(p) for every integer point lo <= p <= hi (componentwise). fn may
// return false to stop early; the function then returns false.
template <class Fn>
bool for_each_in_box(const Point& lo, const Point& hi, Fn&& fn) {
  const std::size_t d = lo.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (lo[i] > hi[i]) return true;
  }
  Point p = lo;
  while (true) {
    if (!fn(static_cast<const Point&>(p))) return false;
    std::size_t j = 0;
    while (j < d) {
      if (p[j] < hi[j]) {
        ++p[j];
        break;
      }
      p[j] = lo[j];
      ++j;
    }
    if (j == d) return true;
  }
}

// Calls fn(p) for every p in N^d with degree(p) <= max_degree.
template <class Fn>
void for_each_up_to_degree(std::size_t d, Coord max_degree, Fn&& fn) {
  Point p(d);
  Coord used = 0;
  while (true) {
    fn(static_cast<const Point&>(p));
    std::size_t j = 0;
    while (j < d) {
      if (used < max_degree) {
        ++p[j];
        ++used;
        break;
      }
      used -= p[j];
      p[j] = 0;
      ++j;
    }
    if (j == d) return;
  }
}

}  // namespace csg::detail
