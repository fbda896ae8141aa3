#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "cdl/geometry.hpp"

namespace cdl {

// A point sequence in convex position, stored in CCW cyclic order.
// Construction validates the order against the strict convex hull; a CW
// input is reversed, anything else is rejected. Two points are allowed as
// a degenerate instance (needed for pair statistics), three or more must
// be a convex polygon with no three collinear (hull order == input cycle).
template <class K>
class ConvexInstance {
 public:
  using Kernel = K;
  using Pt = typename K::Pt;
  using Scalar = typename K::Scalar;

  static ConvexInstance from_points(std::vector<Pt> pts, K kernel = {}) {
    if (pts.size() < 2)
      throw std::invalid_argument("instance: need at least 2 points");
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (kernel.points_eq(pts[i], pts[j]))
          throw std::invalid_argument("instance: duplicate points");
    if (pts.size() >= 3) {
      auto hull = kernel.hull(std::span<const Pt>(pts));
      if (hull.size() != pts.size())
        throw std::invalid_argument("instance: points not in convex position");
      if (!cyclic_match(hull, pts.size())) {
        std::reverse(pts.begin(), pts.end());
        hull = kernel.hull(std::span<const Pt>(pts));
        if (!cyclic_match(hull, pts.size()))
          throw std::invalid_argument(
              "instance: sequence is not the convex cyclic order");
      }
    }
    return ConvexInstance(std::move(pts), kernel);
  }

  size_t size() const { return pts_.size(); }
  const Pt& point(size_t i) const { return pts_[i]; }
  const Pt& point_mod(size_t i) const { return pts_[i % pts_.size()]; }
  const std::vector<Pt>& points() const { return pts_; }
  const K& kernel() const { return kernel_; }

  size_t next(size_t i) const { return (i + 1) % pts_.size(); }
  size_t prev(size_t i) const { return (i + pts_.size() - 1) % pts_.size(); }

  // Steps from `from` to `i` walking forward in cyclic order.
  size_t offset(size_t from, size_t i) const {
    size_t n = pts_.size();
    return (i + n - from % n) % n;
  }

 private:
  ConvexInstance(std::vector<Pt> pts, K kernel)
      : pts_(std::move(pts)), kernel_(kernel) {}

  // hull indices (CCW, arbitrary start) match the identity cycle 0..n-1
  static bool cyclic_match(const std::vector<size_t>& hull, size_t n) {
    if (hull.size() != n) return false;
    size_t start = std::find(hull.begin(), hull.end(), 0) - hull.begin();
    for (size_t k = 0; k < n; ++k)
      if (hull[(start + k) % n] != k) return false;
    return true;
  }

  std::vector<Pt> pts_;
  K kernel_;
};

using ExactInstance = ConvexInstance<ExactKernel>;
using FloatInstance = ConvexInstance<FloatKernel>;

// min((j-i) mod n, (i-j) mod n)
size_t circular_distance(size_t i, size_t j, size_t n);

}  // namespace cdl
