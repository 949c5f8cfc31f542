#include "csg/cone.hpp"

#include <algorithm>
#include <functional>

#include "csg/linalg.hpp"

namespace csg {

namespace {

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<Coord>> as_witness(const std::vector<Point>& pts) {
  std::vector<std::vector<Coord>> w;
  for (const Point& p : pts) w.push_back(p.coords());
  return w;
}

}  // namespace

RationalCone RationalCone::from_rays(const std::vector<Point>& input) {
  if (input.empty()) fail(ErrorKind::InvalidInput, "cone needs at least one ray");
  const std::size_t d = input.front().dim();
  if (d == 0) fail(ErrorKind::DimensionMismatch, "rays must have dimension >= 1");
  std::vector<Point> rays;
  for (const Point& r : input) {
    require_dim(r, d, "cone ray");
    if (r.is_zero()) fail(ErrorKind::InvalidInput, "cone rays must be nonzero");
    rays.push_back(linalg::primitive(r));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  if (linalg::rank(rays) != d) {
    fail(ErrorKind::DimensionMismatch, "rays do not span a full-dimensional cone",
         as_witness(rays));
  }

  std::vector<Point> facets;
  for_each_subset(rays.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    linalg::Matrix sub;
    for (std::size_t i : idx) sub.push_back(rays[i]);
    Point n = linalg::cross(sub, d);
    if (n.is_zero()) return;
    bool pos = false, neg = false;
    for (const Point& r : rays) {
      Coord v = linalg::dot(n, r);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) return;
    if (neg) n = n * -1;
    facets.push_back(linalg::primitive(n));
  });
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  if (facets.empty() || linalg::rank(facets) != d) {
    fail(ErrorKind::NonPointedCone, "cone contains a line", as_witness(rays));
  }

  std::vector<Point> extremal;
  for (const Point& r : rays) {
    linalg::Matrix tight;
    for (const Point& f : facets) {
      if (linalg::dot(f, r) == 0) tight.push_back(f);
    }
    if (linalg::rank(tight) == d - 1) extremal.push_back(r);
  }

  RationalCone c;
  c.dim_ = d;
  c.rays_ = std::move(extremal);
  c.facets_ = std::move(facets);
  return c;
}

RationalCone RationalCone::orthant(std::size_t dim) {
  std::vector<Point> rays;
  for (std::size_t i = 0; i < dim; ++i) rays.push_back(Point::unit(dim, i));
  return from_rays(rays);
}

bool RationalCone::in_orthant() const noexcept {
  return std::all_of(rays_.begin(), rays_.end(),
                     [](const Point& r) { return r.is_nonnegative(); });
}

bool RationalCone::contains(const Point& p) const {
  require_dim(p, dim_, "cone membership");
  for (const Point& f : facets_) {
    if (linalg::dot(f, p) < 0) return false;
  }
  return true;
}

PointSet parallelepiped_lattice_points(const std::vector<Point>& rays) {
  if (rays.empty()) fail(ErrorKind::InvalidInput, "no rays given");
  const std::size_t d = rays.front().dim();
  if (rays.size() != d) {
    fail(ErrorKind::DimensionMismatch, "need exactly d rays in dimension d",
         as_witness(rays));
  }
  for (const Point& r : rays) require_dim(r, d, "parallelepiped ray");
  // Columns are the rays.
  linalg::Matrix m = linalg::transpose(rays);
  Coord det = linalg::determinant(m);
  if (det == 0) fail(ErrorKind::SingularRays, "rays are linearly dependent", as_witness(rays));
  linalg::Matrix adj = linalg::adjugate(m);
  const Coord sign = det > 0 ? 1 : -1;
  const Coord D = det > 0 ? det : -det;

  Point lo(d), hi(d);
  for (const Point& r : rays) {
    for (std::size_t j = 0; j < d; ++j) {
      if (r[j] < 0) lo[j] = arith::add(lo[j], r[j]);
      else hi[j] = arith::add(hi[j], r[j]);
    }
  }

  PointSet out;
  Point p = lo;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < d && inside; ++i) {
      Coord w = arith::mul(sign, linalg::dot(adj[i], p));
      inside = (w >= 0 && w < D);
    }
    if (inside) out.insert(p);
    std::size_t j = 0;
    while (j < d) {
      if (p[j] < hi[j]) {
        ++p[j];
        break;
      }
      p[j] = lo[j];
      ++j;
    }
    if (j == d) break;
  }
  return out;
}

}  // namespace csg
