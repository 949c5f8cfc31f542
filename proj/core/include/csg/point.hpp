#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "csg/arith.hpp"

namespace csg {

// An integer vector in Z^d. Ordered lexicographically.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : c_(dim, 0) {}
  Point(std::initializer_list<Coord> coords) : c_(coords) {}
  explicit Point(std::vector<Coord> coords) : c_(std::move(coords)) {}

  static Point zero(std::size_t dim) { return Point(dim); }
  static Point unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const noexcept { return c_.size(); }
  Coord operator[](std::size_t i) const { return c_[i]; }
  Coord& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Coord>& coords() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_nonnegative() const noexcept;
  // Sum of coordinates; equals the l1 norm on N^d.
  Coord degree() const;

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;
  Point operator*(Coord k) const;
  Point& operator+=(const Point& o);

  // Componentwise a <= b.
  bool dominated_by(const Point& o) const;

  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;

  std::string str() const;

 private:
  std::vector<Coord> c_;
};

inline Point operator*(Coord k, const Point& p) { return p * k; }

std::ostream& operator<<(std::ostream& os, const Point& p);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

using PointSet = std::set<Point>;

std::string to_string(const Point& p);
std::string to_string(const PointSet& s);

// Throws DimensionMismatch unless every point has dimension `dim`.
void require_dim(const Point& p, std::size_t dim, const char* what);

}  // namespace csg
