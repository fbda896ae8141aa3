#pragma once

#include <cmath>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

#include "cdl/rational.hpp"

namespace cdl {

enum class Orientation { Clockwise, CounterClockwise, Collinear };

// ---------------------------------------------------------------------------
// Exact backend: rational coordinates, decidable predicates.

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

Rational squared_distance(const Point& p, const Point& q);
Orientation orientation(const Point& p, const Point& q, const Point& r);

// True iff the angle at v in the path a-v-b is >= pi/2, i.e.
// (a-v).(b-v) <= 0. Throws if v coincides with a or b.
bool angle_not_acute(const Point& a, const Point& v, const Point& b);

// True iff |xa| = |xb| exactly. Throws if a == b.
bool on_bisector(const Point& x, const Point& a, const Point& b);

// Sign of the cross product (b-a) x (p-a): +1 left, -1 right, 0 on line.
int line_side(const Point& a, const Point& b, const Point& p);

// Set-level test: all points distinct and every one a strict hull vertex
// (which also rules out collinear triples). Order of the input is ignored.
bool is_convex_position(std::span<const Point> pts);

// Strict convex hull in CCW order, as indices into pts. Collinear points
// on hull edges are not vertices and make the hull smaller than the set.
std::vector<size_t> convex_hull_indices(std::span<const Point> pts);

// ---------------------------------------------------------------------------
// Floating backend for irrational constructions (regular n-gons, arcs).
// Every comparison is tolerance-based with a caller-supplied eps.

struct FloatPoint {
  double x;
  double y;
};

double squared_distance(const FloatPoint& p, const FloatPoint& q);
Orientation orientation(const FloatPoint& p, const FloatPoint& q,
                        const FloatPoint& r, double eps);
bool angle_not_acute(const FloatPoint& a, const FloatPoint& v,
                     const FloatPoint& b, double eps);
bool on_bisector(const FloatPoint& x, const FloatPoint& a, const FloatPoint& b,
                 double eps);
int line_side(const FloatPoint& a, const FloatPoint& b, const FloatPoint& p,
              double eps);
bool is_convex_position(std::span<const FloatPoint> pts, double eps);
std::vector<size_t> convex_hull_indices(std::span<const FloatPoint> pts,
                                        double eps);

// ---------------------------------------------------------------------------
// Kernels: the one stateful difference between backends is eps. Algorithms
// over instances are written once against this interface.

struct ExactKernel {
  using Scalar = Rational;
  using Pt = Point;
  static constexpr bool is_exact = true;

  Scalar sqdist(const Pt& p, const Pt& q) const {
    return squared_distance(p, q);
  }
  Orientation orient(const Pt& p, const Pt& q, const Pt& r) const {
    return orientation(p, q, r);
  }
  bool not_acute(const Pt& a, const Pt& v, const Pt& b) const {
    return angle_not_acute(a, v, b);
  }
  bool bisector(const Pt& x, const Pt& a, const Pt& b) const {
    return on_bisector(x, a, b);
  }
  int side(const Pt& a, const Pt& b, const Pt& p) const {
    return line_side(a, b, p);
  }
  bool scalar_eq(const Scalar& a, const Scalar& b) const { return a == b; }
  bool points_eq(const Pt& a, const Pt& b) const { return a == b; }
  bool convex_position(std::span<const Pt> pts) const {
    return is_convex_position(pts);
  }
  std::vector<size_t> hull(std::span<const Pt> pts) const {
    return convex_hull_indices(pts);
  }
  double eps_value() const { return 0.0; }
  static const char* backend_name() { return "exact"; }
};

struct FloatKernel {
  using Scalar = double;
  using Pt = FloatPoint;
  static constexpr bool is_exact = false;

  double eps = 1e-9;

  Scalar sqdist(const Pt& p, const Pt& q) const {
    return squared_distance(p, q);
  }
  Orientation orient(const Pt& p, const Pt& q, const Pt& r) const {
    return orientation(p, q, r, eps);
  }
  bool not_acute(const Pt& a, const Pt& v, const Pt& b) const {
    return angle_not_acute(a, v, b, eps);
  }
  bool bisector(const Pt& x, const Pt& a, const Pt& b) const {
    return on_bisector(x, a, b, eps);
  }
  int side(const Pt& a, const Pt& b, const Pt& p) const {
    return line_side(a, b, p, eps);
  }
  bool scalar_eq(Scalar a, Scalar b) const { return std::abs(a - b) <= eps; }
  bool points_eq(const Pt& a, const Pt& b) const {
    return a.x == b.x && a.y == b.y;
  }
  bool convex_position(std::span<const Pt> pts) const {
    return is_convex_position(pts, eps);
  }
  std::vector<size_t> hull(std::span<const Pt> pts) const {
    return convex_hull_indices(pts, eps);
  }
  double eps_value() const { return eps; }
  static const char* backend_name() { return "float"; }
};

// Invariant checks that hold by theorem, not by input validation. A failure
// here is an implementation bug, so it throws unconditionally. Distinct
// from invalid_argument so campaign drivers can tell the two apart.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void internal_check(bool cond, const char* what) {
  if (!cond) throw internal_error(std::string("internal invariant: ") + what);
}

}  // namespace cdl
