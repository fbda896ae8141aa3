#include "cdl/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace cdl {

Rational squared_distance(const Point& p, const Point& q) {
  Rational dx = p.x - q.x;
  Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  int s = sgn(cross);
  if (s > 0) return Orientation::CounterClockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

bool angle_not_acute(const Point& a, const Point& v, const Point& b) {
  if (v == a || v == b)
    throw std::invalid_argument("angle_not_acute: apex coincides with an arm");
  Rational dot = (a.x - v.x) * (b.x - v.x) + (a.y - v.y) * (b.y - v.y);
  return sgn(dot) <= 0;
}

bool on_bisector(const Point& x, const Point& a, const Point& b) {
  if (a == b) throw std::invalid_argument("on_bisector: degenerate segment");
  return squared_distance(x, a) == squared_distance(x, b);
}

int line_side(const Point& a, const Point& b, const Point& p) {
  Rational cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  return sgn(cross);
}

namespace {

// Andrew monotone chain with strict turns; shared by both backends through
// the side predicate.
template <class Pt, class Side, class Less, class Eq>
std::vector<size_t> hull_impl(std::span<const Pt> pts, Side side, Less less,
                              Eq eq) {
  size_t n = pts.size();
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](size_t i, size_t j) { return less(pts[i], pts[j]); });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](size_t i, size_t j) { return eq(pts[i], pts[j]); }),
            idx.end());
  n = idx.size();
  if (n < 3) return idx;
  std::vector<size_t> hull(2 * n);
  size_t k = 0;
  for (size_t ii = 0; ii < n; ++ii) {  // lower
    size_t i = idx[ii];
    while (k >= 2 && side(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
    hull[k++] = i;
  }
  size_t lower = k + 1;
  for (size_t ii = n - 1; ii-- > 0;) {  // upper
    size_t i = idx[ii];
    while (k >= lower && side(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0)
      --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

std::vector<size_t> convex_hull_indices(std::span<const Point> pts) {
  return hull_impl(
      pts, [](const Point& a, const Point& b, const Point& p) { return line_side(a, b, p); },
      [](const Point& a, const Point& b) {
        int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : a.y < b.y;
      },
      [](const Point& a, const Point& b) { return a == b; });
}

bool is_convex_position(std::span<const Point> pts) {
  if (pts.size() < 3)
    throw std::invalid_argument("is_convex_position: need at least 3 points");
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return false;
  return convex_hull_indices(pts).size() == pts.size();
}

// ---------------------------------------------------------------------------

double squared_distance(const FloatPoint& p, const FloatPoint& q) {
  double dx = p.x - q.x;
  double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Orientation orientation(const FloatPoint& p, const FloatPoint& q,
                        const FloatPoint& r, double eps) {
  double cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  if (cross > eps) return Orientation::CounterClockwise;
  if (cross < -eps) return Orientation::Clockwise;
  return Orientation::Collinear;
}

bool angle_not_acute(const FloatPoint& a, const FloatPoint& v,
                     const FloatPoint& b, double eps) {
  if ((v.x == a.x && v.y == a.y) || (v.x == b.x && v.y == b.y))
    throw std::invalid_argument("angle_not_acute: apex coincides with an arm");
  double dot = (a.x - v.x) * (b.x - v.x) + (a.y - v.y) * (b.y - v.y);
  return dot <= eps;
}

bool on_bisector(const FloatPoint& x, const FloatPoint& a, const FloatPoint& b,
                 double eps) {
  if (a.x == b.x && a.y == b.y)
    throw std::invalid_argument("on_bisector: degenerate segment");
  return std::abs(squared_distance(x, a) - squared_distance(x, b)) <= eps;
}

int line_side(const FloatPoint& a, const FloatPoint& b, const FloatPoint& p,
              double eps) {
  double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  if (cross > eps) return 1;
  if (cross < -eps) return -1;
  return 0;
}

std::vector<size_t> convex_hull_indices(std::span<const FloatPoint> pts,
                                        double eps) {
  return hull_impl(
      pts,
      [eps](const FloatPoint& a, const FloatPoint& b, const FloatPoint& p) {
        return line_side(a, b, p, eps);
      },
      [](const FloatPoint& a, const FloatPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
      },
      [](const FloatPoint& a, const FloatPoint& b) {
        return a.x == b.x && a.y == b.y;
      });
}

bool is_convex_position(std::span<const FloatPoint> pts, double eps) {
  if (pts.size() < 3)
    throw std::invalid_argument("is_convex_position: need at least 3 points");
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].x == pts[j].x && pts[i].y == pts[j].y) return false;
  return convex_hull_indices(pts, eps).size() == pts.size();
}

}  // namespace cdl
