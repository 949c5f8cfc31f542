#pragma once

#include <cstddef>
#include <vector>

#include "csg/point.hpp"

namespace csg::linalg {

// Square or rectangular integer matrix, row major, rows given as points.
using Matrix = std::vector<Point>;

// Fraction-free (Bareiss) determinant of a square matrix.
Coord determinant(const Matrix& m);

// Adjugate of a square matrix: adj(M) * M = det(M) * I.
Matrix adjugate(const Matrix& m);

std::size_t rank(const Matrix& m);

Matrix transpose(const Matrix& m);

// Divides out the gcd of the coordinates. The zero vector is returned as is.
Point primitive(const Point& p);

Coord dot(const Point& a, const Point& b);

// Integer normal of the hyperplane through the d-1 given vectors in Z^d
// (generalized cross product). Zero if the vectors are dependent.
Point cross(const Matrix& rows, std::size_t dim);

}  // namespace csg::linalg
