#pragma once

// Brute-force reference implementations. Nothing here depends on the rest of
// the library: points are plain vectors and arithmetic is done separately.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace csg::oracle {

using Vec = std::vector<long long>;

enum class OracleErrorKind { OutOfBox, BoxTooSmall, InvalidInput };

class OracleError : public std::runtime_error {
 public:
  OracleError(OracleErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  OracleErrorKind kind() const noexcept { return kind_; }

 private:
  OracleErrorKind kind_;
};

struct BoundedBox {
  Vec upper;            // inclusive per-coordinate upper bounds
  long long degree_cap; // inclusive bound on the coordinate sum
};

// Exhaustive search for a nonnegative integer combination of the generators.
bool oracle_membership(const std::vector<Vec>& generators, const Vec& p, const BoundedBox& box);

// p in the rational cone spanned by `rays`, decided by Cramer's rule over
// every linearly independent d-subset.
bool oracle_in_cone(const std::vector<Vec>& rays, const Vec& p);

// Gaps of <generators> inside the cone spanned by `rays`, scanned over the
// box. Throws BoxTooSmall if a gap touches the box boundary.
std::set<Vec> oracle_gaps(const std::vector<Vec>& generators, const std::vector<Vec>& rays,
                          const BoundedBox& box);

// PF read off the definition: gaps h with h + g in S for every generator g.
std::set<Vec> oracle_pf(const std::vector<Vec>& generators, const std::vector<Vec>& rays,
                        const BoundedBox& box);

// Same, with the cone spanned by the generators themselves.
std::set<Vec> oracle_gaps(const std::vector<Vec>& generators, const BoundedBox& box);
std::set<Vec> oracle_pf(const std::vector<Vec>& generators, const BoundedBox& box);

// Number of integer points l in the half-open parallelepiped of the columns.
long long oracle_parallelepiped_count(const std::vector<Vec>& rays);

// BoundedBox with every coordinate bounded by `side` and degree by d * side.
BoundedBox cube(std::size_t dim, long long side);

}  // namespace csg::oracle
