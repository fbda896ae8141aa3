#include <doctest.h>

#include <cmath>
#include <random>

#include "cdl/census.hpp"
#include "cdl/constructions.hpp"

using namespace cdl;

namespace {

Point pt(long long x, long long y) {
  return {make_rational(x), make_rational(y)};
}

ExactInstance unit_square() {
  return ExactInstance::from_points({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
}

// definitional triple loop over (apex, unordered pair)
template <class K>
unsigned long long naive_census(const ConvexInstance<K>& inst) {
  const auto& k = inst.kernel();
  unsigned long long z = 0;
  for (size_t p = 0; p < inst.size(); ++p)
    for (size_t a = 0; a < inst.size(); ++a)
      for (size_t b = a + 1; b < inst.size(); ++b) {
        if (a == p || b == p) continue;
        if (k.scalar_eq(k.sqdist(inst.point(p), inst.point(a)),
                        k.sqdist(inst.point(p), inst.point(b))))
          ++z;
      }
  return z;
}

}  // namespace

TEST_CASE("small censuses") {
  CHECK(isosceles_census(unit_square()) == 4);
  FloatInstance pentagon = regular_ngon(5);
  CHECK(isosceles_census(pentagon) == 10);
  std::vector<FloatPoint> eq = {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2}};
  FloatInstance equilateral = FloatInstance::from_points(eq, FloatKernel{1e-9});
  CensusReport r = census(equilateral);
  CHECK(r.z == 3);
  CHECK(r.equilateral_triples == 1);
}

TEST_CASE("census matches the naive triple loop up to n = 8") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    ExactInstance inst = random_convex(3 + seed % 6, seed);
    CHECK(isosceles_census(inst) == naive_census(inst));
  }
  for (unsigned n = 3; n <= 8; ++n) {
    FloatInstance gon = regular_ngon(n);
    CHECK(isosceles_census(gon) == naive_census(gon));
  }
}

TEST_CASE("distinct distances from a point") {
  CHECK(distinct_distances_from(unit_square(), 0) == 2);
  CHECK(distinct_distances_from(regular_ngon(12), 0) == 6);
  CHECK(distinct_distances_from(regular_ngon(7), 3) == 3);
  auto generic = ExactInstance::from_points({pt(0, 0), pt(4, 0), pt(2, 3)});
  CHECK(distinct_distances_from(generic, 0) == 2);
  CHECK_THROWS_AS(distinct_distances_from(generic, 9), std::invalid_argument);
}

TEST_CASE("max and total distinct") {
  CHECK(max_point_distinct(regular_ngon(6)) == 3);
  CHECK(max_point_distinct(unit_square()) == 2);
  auto two = ExactInstance::from_points(std::vector<Point>{pt(0, 0), pt(2, 1)});
  CHECK(max_point_distinct(two) == 1);
  CHECK(total_distinct(two) == 1);
  CHECK(total_distinct(unit_square()) == 2);
  CHECK(total_distinct(regular_ngon(7)) == 3);
}

TEST_CASE("census report fields are consistent") {
  CensusReport r = census(unit_square());
  CHECK(r.n == 4);
  CHECK(r.z == 4);
  CHECK(r.good_edges == 4);
  CHECK(r.max_point_distinct == 2);
  CHECK(r.total_distinct == 2);
  CHECK(r.equilateral_triples == 0);
  CHECK(r.backend == "exact");
  CHECK(r.per_point_distinct == std::vector<size_t>{2, 2, 2, 2});
  // json carries every field
  std::string js = census_report_json(r);
  CHECK(js.find("\"good_edges\": 4") != std::string::npos);
  CHECK(js.find("\"backend\": \"exact\"") != std::string::npos);
}

TEST_CASE("szemeredi double count") {
  SzemerediVerdict sq = szemeredi_check(unit_square());
  CHECK(sq.holds);
  CHECK(sq.z == 4);
  CHECK(sq.global_slack == 12 - 4);
  SzemerediVerdict pent = szemeredi_check(regular_ngon(5));
  CHECK(pent.holds);
  CHECK(pent.z == 10);
  CHECK(pent.global_slack == 20 - 10);
  auto generic = ExactInstance::from_points({pt(0, 0), pt(4, 0), pt(2, 3)});
  SzemerediVerdict tri = szemeredi_check(generic);
  CHECK(tri.holds);
  CHECK(tri.z <= 1);
}

TEST_CASE("good edge deduction") {
  DeductionVerdict sq = good_edge_deduction(unit_square());
  CHECK(sq.holds);
  CHECK(sq.z == 4);
  CHECK(sq.good_edges == 4);
  CHECK(sq.slack == 12 - 4 - 4);
  DeductionVerdict pent = good_edge_deduction(regular_ngon(5));
  CHECK(pent.holds);
  CHECK(pent.good_edges >= 5);
  // apex (2,3) is equidistant from the base corners, so z = 1
  auto generic = ExactInstance::from_points({pt(0, 0), pt(4, 0), pt(2, 3)});
  DeductionVerdict tri = good_edge_deduction(generic);
  CHECK(tri.holds);
  CHECK(tri.z == 1);
  CHECK(tri.good_edges == 3);
  CHECK(tri.slack == 6 - 3 - 1);
}

TEST_CASE("every good edge is the base of at most one isosceles triangle") {
  for (std::uint64_t seed : {31u, 32u, 33u, 34u}) {
    ExactInstance inst = random_convex(16, seed);
    for (size_t i = 0; i < inst.size(); ++i)
      for (size_t j = i + 1; j < inst.size(); ++j) {
        EdgeClass ec = classify_edge(inst, i, j);
        if (ec.good) CHECK(ec.bisector_points.size() <= 1);
      }
  }
}

TEST_CASE("improvement coefficient") {
  CHECK(improvement_coefficient(Rational(1)) == make_rational(1, 3));
  CHECK(improvement_coefficient(make_rational(11, 12)) == make_rational(13, 36));
  Rational alpha = make_rational(10981, 11981);
  Rational coeff = improvement_coefficient(alpha);
  CHECK(coeff == make_rational(12981, 35943));
  Rational excess = coeff - make_rational(13, 36);
  CHECK(excess == make_rational(19, 431316));
  CHECK(excess > make_rational(1, 22702));
  CHECK_THROWS_AS(improvement_coefficient(Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(improvement_coefficient(Rational(-1)), std::invalid_argument);
}

TEST_CASE("census statistics are invariant under rational similarities") {
  auto transform = [](const Point& p) {
    Rational c = make_rational(4, 5), s = make_rational(3, 5);
    Rational x = p.x * c - p.y * s + make_rational(3, 7);
    Rational y = p.x * s + p.y * c - 2;
    return Point{x * 5, y * 5};
  };
  ExactInstance inst = random_convex(14, 44);
  std::vector<Point> moved;
  for (const Point& p : inst.points()) moved.push_back(transform(p));
  ExactInstance minst = ExactInstance::from_points(moved);
  CensusReport a = census(inst), b = census(minst);
  CHECK(a.z == b.z);
  CHECK(a.good_edges == b.good_edges);
  CHECK(a.per_point_distinct == b.per_point_distinct);
  CHECK(a.total_distinct == b.total_distinct);
  CHECK(a.equilateral_triples == b.equilateral_triples);
}

TEST_CASE("ordering invariants") {
  for (std::uint64_t seed : {8u, 9u, 10u}) {
    ExactInstance inst = random_convex(12, seed);
    CensusReport r = census(inst);
    CHECK(r.max_point_distinct <= r.total_distinct);
    CHECK(r.total_distinct <= r.n * (r.n - 1) / 2);
    CHECK(r.total_distinct >= r.n / 2);  // convex position floor
    CHECK(r.z <= static_cast<unsigned long long>(r.n) * (r.n - 1) - r.good_edges);
  }
}
