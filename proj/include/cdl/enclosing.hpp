#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cdl/instance.hpp"

namespace cdl {

template <class K>
struct Circle {
  typename K::Pt center;
  typename K::Scalar squared_radius;
};

// Boundary points chosen as the circle's support, as indices (into the
// input order, or the instance cyclic order for splitting_points).
// 2 points are antipodal; 3 points span arcs of at most a semicircle,
// certified by the center lying in their closed triangle.
struct SupportSet {
  std::vector<size_t> indices;
};

namespace detail {

template <class K>
Circle<K> circle_two(const K& k, const typename K::Pt& a,
                     const typename K::Pt& b) {
  using S = typename K::Scalar;
  typename K::Pt c{(a.x + b.x) / S(2), (a.y + b.y) / S(2)};
  return {c, k.sqdist(c, a)};
}

// Circumcircle; a collinear triple degenerates to the diameter circle of
// its two extreme points.
template <class K>
Circle<K> circle_three(const K& k, const typename K::Pt& a,
                       const typename K::Pt& b, const typename K::Pt& c) {
  using S = typename K::Scalar;
  S a2 = a.x * a.x + a.y * a.y;
  S b2 = b.x * b.x + b.y * b.y;
  S c2 = c.x * c.x + c.y * c.y;
  S d = S(2) * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  if (d == S(0)) {
    Circle<K> best = circle_two(k, a, b);
    for (const Circle<K>& cand : {circle_two(k, a, c), circle_two(k, b, c)})
      if (cand.squared_radius > best.squared_radius) best = cand;
    return best;
  }
  typename K::Pt o{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                   (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
  return {o, k.sqdist(o, a)};
}

template <class K>
bool in_circle(const K& k, const Circle<K>& c, const typename K::Pt& p) {
  if constexpr (K::is_exact) {
    return k.sqdist(p, c.center) <= c.squared_radius;
  } else {
    return k.sqdist(p, c.center) <= c.squared_radius + k.eps;
  }
}

// Welzl's move-to-front scheme with a fixed insertion order, so results
// are deterministic for a given input sequence.
template <class K>
Circle<K> welzl(const K& k, std::vector<typename K::Pt> pts) {
  using Pt = typename K::Pt;
  size_t n = pts.size();
  Circle<K> d{pts[0], typename K::Scalar(0)};
  for (size_t i = 1; i < n; ++i) {
    if (in_circle(k, d, pts[i])) continue;
    Pt pi = pts[i];
    d = Circle<K>{pi, typename K::Scalar(0)};
    for (size_t j = 0; j < i; ++j) {
      if (in_circle(k, d, pts[j])) continue;
      Pt pj = pts[j];
      d = circle_two(k, pi, pj);
      for (size_t l = 0; l < j; ++l) {
        if (in_circle(k, d, pts[l])) continue;
        d = circle_three(k, pi, pj, pts[l]);
      }
      std::rotate(pts.begin(), pts.begin() + j, pts.begin() + j + 1);
    }
    std::rotate(pts.begin(), pts.begin() + i, pts.begin() + i + 1);
  }
  return d;
}

template <class K>
bool on_boundary(const K& k, const Circle<K>& c, const typename K::Pt& p) {
  if constexpr (K::is_exact) {
    return k.sqdist(p, c.center) == c.squared_radius;
  } else {
    return std::abs(k.sqdist(p, c.center) - c.squared_radius) <= k.eps;
  }
}

template <class K>
bool antipodal(const K& k, const Circle<K>& c, const typename K::Pt& a,
               const typename K::Pt& b) {
  using S = typename K::Scalar;
  typename K::Pt mid{(a.x + b.x) / S(2), (a.y + b.y) / S(2)};
  if constexpr (K::is_exact) {
    return mid.x == c.center.x && mid.y == c.center.y;
  } else {
    return std::abs(mid.x - c.center.x) <= k.eps &&
           std::abs(mid.y - c.center.y) <= k.eps;
  }
}

// closed triangle containment via sides; degenerate triangles rejected
template <class K>
bool triangle_contains(const K& k, const typename K::Pt& a,
                       const typename K::Pt& b, const typename K::Pt& c,
                       const typename K::Pt& p) {
  int s1 = k.side(a, b, p), s2 = k.side(b, c, p), s3 = k.side(c, a, p);
  int t = k.side(a, b, c);
  if (t == 0) return false;
  if (t < 0) {
    s1 = -s1;
    s2 = -s2;
    s3 = -s3;
  }
  return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

}  // namespace detail

// Smallest enclosing circle plus its deterministic support:
//   - every input point lies inside or on the circle;
//   - support of 2 points is an antipodal boundary pair (smallest index
//     pair), preferred while at most 3 points sit on the boundary;
//   - otherwise the lexicographically smallest boundary index triple whose
//     closed triangle contains the center.
template <class K>
std::pair<Circle<K>, SupportSet> smallest_enclosing_circle(
    std::span<const typename K::Pt> pts, const K& k = {}) {
  if (pts.empty())
    throw std::invalid_argument("smallest_enclosing_circle: empty input");
  std::vector<typename K::Pt> work(pts.begin(), pts.end());
  Circle<K> c = detail::welzl(k, std::move(work));

  std::vector<size_t> boundary;
  for (size_t i = 0; i < pts.size(); ++i) {
    internal_check(detail::in_circle(k, c, pts[i]),
                   "enclosing circle misses an input point");
    if (detail::on_boundary(k, c, pts[i])) boundary.push_back(i);
  }
  internal_check(!boundary.empty(), "no boundary point on enclosing circle");

  SupportSet support;
  if (boundary.size() == 1) {
    support.indices = {boundary[0]};
    return {c, support};
  }
  if (boundary.size() <= 3) {
    for (size_t i = 0; i < boundary.size() && support.indices.empty(); ++i)
      for (size_t j = i + 1; j < boundary.size(); ++j)
        if (detail::antipodal(k, c, pts[boundary[i]], pts[boundary[j]])) {
          support.indices = {boundary[i], boundary[j]};
          break;
        }
    if (!support.indices.empty()) return {c, support};
    internal_check(boundary.size() == 3,
                   "two boundary points must be antipodal");
  }
  for (size_t i = 0; i < boundary.size(); ++i)
    for (size_t j = i + 1; j < boundary.size(); ++j)
      for (size_t l = j + 1; l < boundary.size(); ++l)
        if (detail::triangle_contains(k, pts[boundary[i]], pts[boundary[j]],
                                      pts[boundary[l]], c.center)) {
          support.indices = {boundary[i], boundary[j], boundary[l]};
          return {c, support};
        }
  internal_check(false, "no support triangle contains the center");
  return {c, support};
}

// Support of the instance's smallest enclosing circle, as cyclic indices.
template <class K>
SupportSet splitting_points(const ConvexInstance<K>& inst) {
  auto [circle, support] = smallest_enclosing_circle<K>(
      std::span<const typename K::Pt>(inst.points()), inst.kernel());
  (void)circle;
  return support;
}

}  // namespace cdl
