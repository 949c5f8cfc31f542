#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "csg/cone.hpp"
#include "csg/point.hpp"

namespace csg {

enum class OrderKind { Natural, Cone, Semigroup };

// a <= b iff b - a lies in N^d, in the cone, or in the semigroup.
class PartialOrder {
 public:
  static PartialOrder natural();
  static PartialOrder cone(const RationalCone& c);
  // `member` decides membership in a semigroup; it must outlive the order.
  static PartialOrder semigroup(std::function<bool(const Point&)> member);

  OrderKind kind() const noexcept { return kind_; }
  bool leq(const Point& a, const Point& b) const;
  bool less(const Point& a, const Point& b) const { return a != b && leq(a, b); }

 private:
  OrderKind kind_ = OrderKind::Natural;
  std::shared_ptr<const RationalCone> cone_;
  std::function<bool(const Point&)> member_;
};

// Points of the input that are not strictly below another input point.
PointSet maximals(const PointSet& points, const PartialOrder& order);
PointSet minimals(const PointSet& points, const PartialOrder& order);

}  // namespace csg
