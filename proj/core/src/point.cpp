#include "csg/point.hpp"

#include <sstream>

namespace csg {

Point Point::unit(std::size_t dim, std::size_t axis) {
  Point p(dim);
  p.c_.at(axis) = 1;
  return p;
}

bool Point::is_zero() const noexcept {
  for (Coord v : c_) {
    if (v != 0) return false;
  }
  return true;
}

bool Point::is_nonnegative() const noexcept {
  for (Coord v : c_) {
    if (v < 0) return false;
  }
  return true;
}

Coord Point::degree() const {
  Coord s = 0;
  for (Coord v : c_) s = arith::add(s, v);
  return s;
}

Point Point::operator+(const Point& o) const {
  Point r = *this;
  r += o;
  return r;
}

Point& Point::operator+=(const Point& o) {
  require_dim(o, dim(), "point addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = arith::add(c_[i], o.c_[i]);
  return *this;
}

Point Point::operator-(const Point& o) const {
  require_dim(o, dim(), "point subtraction");
  Point r(dim());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = arith::sub(c_[i], o.c_[i]);
  return r;
}

Point Point::operator*(Coord k) const {
  Point r(dim());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = arith::mul(c_[i], k);
  return r;
}

bool Point::dominated_by(const Point& o) const {
  require_dim(o, dim(), "componentwise comparison");
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] > o.c_[i]) return false;
  }
  return true;
}

std::string Point::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = p.dim();
  for (Coord v : p.coords()) {
    h ^= std::hash<Coord>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::string to_string(const PointSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Point& p : s) {
    if (!first) os << ',';
    first = false;
    os << p;
  }
  os << '}';
  return os.str();
}

void require_dim(const Point& p, std::size_t dim, const char* what) {
  if (p.dim() != dim) {
    fail(ErrorKind::DimensionMismatch,
         std::string(what) + ": expected dimension " + std::to_string(dim) +
             ", got " + std::to_string(p.dim()),
         {p.coords()});
  }
}

}  // namespace csg
