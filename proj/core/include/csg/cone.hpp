#pragma once

#include <cstddef>
#include <vector>

#include "csg/point.hpp"

namespace csg {

// A full-dimensional pointed rational cone, described both by its primitive
// extremal rays and by inward facet normals.
class RationalCone {
 public:
  // Rays are made primitive, deduplicated and sorted; non-extremal input rays
  // are dropped. Throws DimensionMismatch if the rays do not span R^d and
  // NonPointedCone if the cone contains a line.
  static RationalCone from_rays(const std::vector<Point>& rays);
  static RationalCone orthant(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Point>& rays() const noexcept { return rays_; }
  const std::vector<Point>& facets() const noexcept { return facets_; }
  bool is_simplicial() const noexcept { return rays_.size() == dim_; }
  // True when every ray lies in N^d, i.e. the cone sits inside the orthant.
  bool in_orthant() const noexcept;

  bool contains(const Point& p) const;

  bool operator==(const RationalCone& o) const {
    return dim_ == o.dim_ && rays_ == o.rays_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Point> rays_;
  std::vector<Point> facets_;
};

// Integer points of the half-open parallelepiped {sum l_i r_i : 0 <= l_i < 1}.
// Exactly |det| points. Throws SingularRays for dependent rays.
PointSet parallelepiped_lattice_points(const std::vector<Point>& rays);

}  // namespace csg
