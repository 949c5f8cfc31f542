#include "csg/order.hpp"

namespace csg {

PartialOrder PartialOrder::natural() { return PartialOrder{}; }

PartialOrder PartialOrder::cone(const RationalCone& c) {
  PartialOrder o;
  o.kind_ = OrderKind::Cone;
  o.cone_ = std::make_shared<const RationalCone>(c);
  return o;
}

PartialOrder PartialOrder::semigroup(std::function<bool(const Point&)> member) {
  PartialOrder o;
  o.kind_ = OrderKind::Semigroup;
  o.member_ = std::move(member);
  return o;
}

bool PartialOrder::leq(const Point& a, const Point& b) const {
  require_dim(b, a.dim(), "order comparison");
  switch (kind_) {
    case OrderKind::Natural:
      return a.dominated_by(b);
    case OrderKind::Cone:
      return cone_->contains(b - a);
    case OrderKind::Semigroup:
      return member_(b - a);
  }
  return false;
}

PointSet maximals(const PointSet& points, const PartialOrder& order) {
  PointSet out;
  for (const Point& p : points) {
    bool dominated = false;
    for (const Point& q : points) {
      if (order.less(p, q)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(p);
  }
  return out;
}

PointSet minimals(const PointSet& points, const PartialOrder& order) {
  PointSet out;
  for (const Point& p : points) {
    bool dominated = false;
    for (const Point& q : points) {
      if (order.less(q, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(p);
  }
  return out;
}

}  // namespace csg
