#include "csg/linalg.hpp"

#include "csg/arith.hpp"

#include <cstdlib>

namespace csg::linalg {

namespace {

using arith::Wide;


std::vector<std::vector<Wide>> widen(const Matrix& m) {
  std::vector<std::vector<Wide>> w;
  w.reserve(m.size());
  for (const Point& row : m) {
    std::vector<Wide> r(row.coords().begin(), row.coords().end());
    w.push_back(std::move(r));
  }
  return w;
}

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr Wide kWideLimit = (static_cast<Wide>(1) << 120);

void check_range(Wide v) {
  if (v > kWideLimit || v < -kWideLimit) {
    fail(ErrorKind::ArithmeticOverflow, "intermediate value in elimination too large");
  }
}

}  // namespace

Coord determinant(const Matrix& m) {
  const std::size_t n = m.size();
  for (const Point& row : m) require_dim(row, n, "determinant");
  if (n == 0) return 1;
  auto a = widen(m);
  Wide sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Wide v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        check_range(v);
        a[i][j] = v / prev;
      }
    }
    prev = a[k][k];
  }
  return arith::narrow(sign * a[n - 1][n - 1]);
}

Matrix adjugate(const Matrix& m) {
  const std::size_t n = m.size();
  for (const Point& row : m) require_dim(row, n, "adjugate");
  Matrix adj(n, Point(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Cofactor C_ij goes to adj[j][i].
      Matrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        Point row(n - 1);
        std::size_t c2 = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          row[c2++] = m[r][c];
        }
        minor.push_back(std::move(row));
      }
      Coord det = determinant(minor);
      adj[j][i] = ((i + j) % 2 == 0) ? det : arith::sub(0, det);
    }
  }
  return adj;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  auto a = widen(m);
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Wide f = a[i][c];
      Wide p = a[r][c];
      Wide g = 0;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = a[i][j] * p - a[r][j] * f;
        check_range(a[i][j]);
        g = wide_gcd(g, a[i][j]);
      }
      if (g > 1) {
        for (std::size_t j = c; j < cols; ++j) a[i][j] /= g;
      }
    }
    ++r;
  }
  return r;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].dim();
  Matrix t(cols, Point(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    require_dim(m[i], cols, "transpose");
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

Point primitive(const Point& p) {
  Coord g = 0;
  for (Coord v : p.coords()) g = arith::gcd(g, v);
  if (g <= 1) return p;
  Point r(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) r[i] = p[i] / g;
  return r;
}

Coord dot(const Point& a, const Point& b) {
  require_dim(b, a.dim(), "dot product");
  Coord s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s = arith::add(s, arith::mul(a[i], b[i]));
  return s;
}

Point cross(const Matrix& rows, std::size_t dim) {
  Point n(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    Matrix minor;
    for (const Point& row : rows) {
      require_dim(row, dim, "cross product");
      Point r(dim - 1);
      std::size_t c2 = 0;
      for (std::size_t c = 0; c < dim; ++c) {
        if (c != k) r[c2++] = row[c];
      }
      minor.push_back(std::move(r));
    }
    Coord det = determinant(minor);
    n[k] = (k % 2 == 0) ? det : arith::sub(0, det);
  }
  return n;
}

}  // namespace csg::linalg
