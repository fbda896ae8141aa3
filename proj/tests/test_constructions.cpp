#include <doctest.h>

#include <random>
#include <set>

#include "cdl/census.hpp"
#include "cdl/constructions.hpp"

using namespace cdl;

TEST_CASE("regular n-gon statistics") {
  CHECK(total_distinct(regular_ngon(4)) == 2);
  CHECK(isosceles_census(regular_ngon(5)) == 10);
  CHECK(max_point_distinct(regular_ngon(12)) == 6);
  CHECK_THROWS_AS(regular_ngon(2), std::invalid_argument);
}

TEST_CASE("n-gon census matches the gap-model closed form") {
  // distances from a vertex pair up symmetrically: Z = n * floor((n-1)/2)
  for (unsigned n = 3; n <= 100; ++n)
    CHECK(isosceles_census(regular_ngon(n)) ==
          static_cast<unsigned long long>(n) * ((n - 1) / 2));
}

TEST_CASE("quarter arc with center") {
  FloatInstance small = quarter_arc_with_center(5);
  CHECK(small.size() == 5);
  ArcCensus oracle = symbolic_arc_census(4, true, make_rational(1, 2));
  CensusReport r = census(small);
  CHECK(r.z == oracle.z);
  CHECK(r.z == 12);
  CHECK(r.equilateral_triples == oracle.equilateral_triples);
  CHECK(r.equilateral_triples == 2);
  CHECK_THROWS_AS(quarter_arc_with_center(3), std::invalid_argument);
}

TEST_CASE("symbolic arc census basics") {
  CHECK(symbolic_arc_census(4, false, make_rational(1, 2)).z == 2);
  CHECK(symbolic_arc_census(2, false, make_rational(1, 2)).z == 0);
  ArcCensus big = symbolic_arc_census(999, true, make_rational(1, 2));
  CHECK(big.z == 747502);  // 499^2 index progressions + C(999,2) center pairs
  double ratio = static_cast<double>(big.z) / (1000.0 * 1000.0);
  CHECK(ratio > 0.74);
  CHECK(ratio < 0.76);
  CHECK_THROWS_AS(symbolic_arc_census(1, false, make_rational(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(symbolic_arc_census(5, false, make_rational(3, 2)),
                  std::invalid_argument);
}

TEST_CASE("density windows at mid sizes") {
  CensusReport mid = census(quarter_arc_with_center(101));
  double r101 = static_cast<double>(mid.z) / (101.0 * 101.0);
  CHECK(r101 >= 0.70);
  CHECK(r101 <= 0.78);
  ArcCensus k1000 = symbolic_arc_census(1000, true, make_rational(1, 2));
  double r1001 = static_cast<double>(k1000.z) / (1001.0 * 1001.0);
  CHECK(r1001 >= 0.74);
  CHECK(r1001 <= 0.76);
}

TEST_CASE("float census equals the symbolic count on small sizes") {
  for (unsigned n = 4; n <= 60; ++n) {
    FloatInstance inst = quarter_arc_with_center(n);
    ArcCensus oracle = symbolic_arc_census(n - 1, true, make_rational(1, 2));
    CensusReport r = census(inst);
    CHECK(r.z == oracle.z);
    CHECK(r.equilateral_triples == oracle.equilateral_triples);
  }
}

TEST_CASE("rational concyclic points sit exactly on the unit circle") {
  auto axis = rational_concyclic(
      {make_rational(-1), make_rational(0), make_rational(1)});
  CHECK(axis.point(0) == Point{Rational(0), Rational(-1)});
  CHECK(axis.point(1) == Point{Rational(1), Rational(0)});
  CHECK(axis.point(2) == Point{Rational(0), Rational(1)});

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> num(-40, 40), den(1, 9);
  std::set<Rational> params;
  while (params.size() < 15) params.insert(make_rational(num(rng), den(rng)));
  auto inst =
      rational_concyclic(std::vector<Rational>(params.begin(), params.end()));
  for (const Point& p : inst.points())
    CHECK(p.x * p.x + p.y * p.y == 1);
  CHECK_THROWS_AS(rational_concyclic({Rational(1), Rational(1), Rational(2)}),
                  std::invalid_argument);
}

TEST_CASE("rotation arc points are exactly concyclic") {
  ExactInstance inst = rotation_arc({0, 2, 5, 9}, max_rotation_scale(9));
  for (const Point& p : inst.points())
    CHECK(p.x * p.x + p.y * p.y == 1);
  CHECK(inst.point(0) == Point{Rational(1), Rational(0)});
  CHECK_THROWS_AS(rotation_arc({0, 100}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(rotation_arc({0, 1, 1}, make_rational(1, 100)),
                  std::invalid_argument);
}

TEST_CASE("random_convex is deterministic and valid") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    unsigned n = 3 + seed % 38;
    ExactInstance a = random_convex(n, seed);
    ExactInstance b = random_convex(n, seed);
    CHECK(a.size() == n);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a.point(i) == b.point(i));
    CHECK(is_convex_position(std::span<const Point>(a.points())));
  }
}
