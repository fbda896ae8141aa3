#include <doctest.h>

#include <random>
#include <set>

#include "cdl/caps.hpp"
#include "cdl/constructions.hpp"
#include "cdl/enclosing.hpp"

using namespace cdl;

namespace {

Point pt(long long x, long long y) {
  return {make_rational(x), make_rational(y)};
}

// all candidate circles from point pairs (diameters) and triples
// (circumcircles); the smallest one containing everything
Circle<ExactKernel> brute_force_sec(const std::vector<Point>& pts) {
  ExactKernel k;
  bool found = false;
  Circle<ExactKernel> best{pts[0], Rational(0)};
  auto consider = [&](const Circle<ExactKernel>& c) {
    for (const Point& p : pts)
      if (k.sqdist(p, c.center) > c.squared_radius) return;
    if (!found || c.squared_radius < best.squared_radius) {
      best = c;
      found = true;
    }
  };
  if (pts.size() == 1) return best;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      consider(detail::circle_two(k, pts[i], pts[j]));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      for (size_t l = j + 1; l < pts.size(); ++l) {
        if (orientation(pts[i], pts[j], pts[l]) == Orientation::Collinear)
          continue;
        consider(detail::circle_three(k, pts[i], pts[j], pts[l]));
      }
  REQUIRE(found);
  return best;
}

}  // namespace

TEST_CASE("two-point diameter case") {
  std::vector<Point> pts = {pt(0, 0), pt(2, 0)};
  auto [c, support] = smallest_enclosing_circle<ExactKernel>(pts);
  CHECK(c.center == pt(1, 0));
  CHECK(c.squared_radius == 1);
  CHECK(support.indices == std::vector<size_t>{0, 1});
}

TEST_CASE("obtuse triangle: circle spans the long side") {
  std::vector<Point> pts = {pt(0, 0), pt(4, 0), pt(1, 1)};
  auto [c, support] = smallest_enclosing_circle<ExactKernel>(pts);
  CHECK(c.center == pt(2, 0));
  CHECK(c.squared_radius == 4);
  CHECK(support.indices == std::vector<size_t>{0, 1});
}

TEST_CASE("acute triangle: circumcircle with 3-point support") {
  std::vector<Point> pts = {pt(0, 0), pt(4, 0), pt(2, 3)};
  auto [c, support] = smallest_enclosing_circle<ExactKernel>(pts);
  CHECK(c.center == Point{make_rational(2), make_rational(5, 6)});
  CHECK(c.squared_radius == make_rational(169, 36));
  CHECK(support.indices == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("splitting points of the unit square: a corner triple") {
  auto inst = ExactInstance::from_points(
      {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  SupportSet s = splitting_points(inst);
  REQUIRE(s.indices.size() == 3);
  CHECK(s.indices == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("right triangle prefers the antipodal pair") {
  auto inst = ExactInstance::from_points({pt(-1, 0), pt(0, 1), pt(1, 0)});
  SupportSet s = splitting_points(inst);
  REQUIRE(s.indices.size() == 2);
  CHECK(s.indices == std::vector<size_t>{0, 2});
}

TEST_CASE("regular pentagon support spans arcs of at most a semicircle") {
  FloatInstance inst = regular_ngon(5);
  SupportSet s = splitting_points(inst);
  REQUIRE(s.indices.size() == 3);
  // center inside or on the support triangle certifies the arc condition
  FloatKernel k;
  const auto& p = inst.points();
  FloatPoint center{0.0, 0.0};
  CHECK(detail::triangle_contains(k, p[s.indices[0]], p[s.indices[1]],
                                  p[s.indices[2]], center));
}

TEST_CASE("matches brute force on small random sets") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long long> c(-30, 30);
  std::uniform_int_distribution<int> nd(2, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = nd(rng);
    std::set<std::pair<long long, long long>> uniq;
    while (static_cast<int>(uniq.size()) < n) uniq.insert({c(rng), c(rng)});
    std::vector<Point> pts;
    for (auto [x, y] : uniq) pts.push_back(pt(x, y));
    auto [circle, support] = smallest_enclosing_circle<ExactKernel>(pts);
    Circle<ExactKernel> oracle = brute_force_sec(pts);
    CHECK(circle.center == oracle.center);
    CHECK(circle.squared_radius == oracle.squared_radius);
    // every support point is on the boundary
    ExactKernel k;
    for (size_t i : support.indices)
      CHECK(k.sqdist(pts[i], circle.center) == circle.squared_radius);
    // containment with at least one boundary point
    bool boundary = false;
    for (const Point& p : pts) {
      Rational d = k.sqdist(p, circle.center);
      CHECK(d <= circle.squared_radius);
      if (d == circle.squared_radius) boundary = true;
    }
    CHECK(boundary);
    if (support.indices.size() == 2) {
      Point mid{(pts[support.indices[0]].x + pts[support.indices[1]].x) / 2,
                (pts[support.indices[0]].y + pts[support.indices[1]].y) / 2};
      CHECK(mid == circle.center);
    }
    if (support.indices.size() == 3)
      CHECK(detail::triangle_contains(k, pts[support.indices[0]],
                                      pts[support.indices[1]],
                                      pts[support.indices[2]], circle.center));
  }
}

TEST_CASE("empty input is rejected") {
  std::vector<Point> none;
  CHECK_THROWS_AS(smallest_enclosing_circle<ExactKernel>(none),
                  std::invalid_argument);
}

TEST_CASE("collinear input degenerates to the extreme diameter") {
  std::vector<Point> line = {pt(6, 3), pt(0, 0), pt(4, 2), pt(2, 1)};
  auto [c, support] = smallest_enclosing_circle<ExactKernel>(line);
  CHECK(c.center == Point{make_rational(3), make_rational(3, 2)});
  CHECK(c.squared_radius == make_rational(45, 4));
  REQUIRE(support.indices.size() == 2);
  CHECK(support.indices == std::vector<size_t>{0, 1});
}

TEST_CASE("n-gon splitting sweep") {
  for (unsigned n = 3; n <= 40; ++n) {
    FloatInstance gon = regular_ngon(n);
    SupportSet s = splitting_points(gon);
    REQUIRE(s.indices.size() >= 2);
    REQUIRE(s.indices.size() <= 3);
    FloatKernel k;
    FloatPoint center{0.0, 0.0};
    const auto& p = gon.points();
    if (s.indices.size() == 2) {
      FloatPoint mid{(p[s.indices[0]].x + p[s.indices[1]].x) / 2,
                     (p[s.indices[0]].y + p[s.indices[1]].y) / 2};
      CHECK(std::abs(mid.x) <= 1e-9);
      CHECK(std::abs(mid.y) <= 1e-9);
    } else {
      CHECK(detail::triangle_contains(k, p[s.indices[0]], p[s.indices[1]],
                                      p[s.indices[2]], center));
    }
    // the decomposition it induces is well formed
    auto caps = cap_decomposition(gon);
    size_t covered = 0;
    for (const auto& cap : caps) covered += cap.size() - 1;
    CHECK(covered == n);
  }
}
