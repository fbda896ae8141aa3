#include <doctest.h>

#include "cdl/checks.hpp"
#include "cdl/constructions.hpp"

using namespace cdl;

namespace {

Point pt(long long x, long long y) {
  return {make_rational(x), make_rational(y)};
}

}  // namespace

TEST_CASE("check_monotone on a symmetric grid cap") {
  // multiples 0,2,4,6,8: witnesses exist for (a, x2) and (a, b)
  ExactInstance inst = rotation_arc({0, 2, 4, 6, 8}, max_rotation_scale(8));
  Cap<ExactKernel> cap = whole_cap(inst);
  CheckResult r = check_monotone(cap, 2);
  CHECK(r.verdict == Verdict::Holds);
  CHECK_THROWS_AS(check_monotone(cap, 0), std::invalid_argument);
}

TEST_CASE("check_monotone skips when premises fail") {
  // multiples 0,1,2,7: edge (a,b) spread 7 is odd, no midpoint present
  ExactInstance inst = rotation_arc({0, 1, 2, 7}, max_rotation_scale(7));
  Cap<ExactKernel> cap = whole_cap(inst);
  CheckResult r = check_monotone(cap, 1);
  CHECK(r.verdict == Verdict::Skip);
}

TEST_CASE("check_half_easy") {
  auto tri = ExactInstance::from_points({pt(-1, 0), pt(0, 1), pt(1, 0)});
  CheckResult r3 = check_half_easy(whole_cap(tri));
  CHECK(r3.verdict == Verdict::Holds);

  auto two = ExactInstance::from_points(std::vector<Point>{pt(0, 0), pt(4, 1)});
  CHECK(check_half_easy(whole_cap(two)).verdict == Verdict::Holds);

  std::vector<long long> dense;
  for (long long k = 0; k < 10; ++k) dense.push_back(k);
  ExactInstance arc = rotation_arc(dense, max_rotation_scale(9));
  CHECK(check_half_easy(whole_cap(arc)).verdict == Verdict::Holds);
}

TEST_CASE("tech sampler produces valid configs deterministically") {
  TechConfig a = sample_tech_config(42);
  TechConfig b = sample_tech_config(42);
  CHECK(a.b == b.b);
  CHECK(a.c == b.c);
  CHECK(a.d == b.d);
  CHECK(tech_premises_hold(a));
  // degenerate seeds put b on the segment ac
  TechConfig deg = sample_tech_config(8);
  CHECK(tech_premises_hold(deg));
  CHECK(orientation(deg.a, deg.b, deg.c) == Orientation::Collinear);
  CHECK(check_tech(deg).verdict == Verdict::Holds);
}

TEST_CASE("check_tech on the symmetric configuration") {
  TechConfig cfg;
  cfg.a = pt(-1, 0);
  cfg.e = pt(1, 0);
  cfg.c = {Rational(0), make_rational(1, 2)};
  cfg.b = {make_rational(-3, 4), make_rational(1, 4)};
  // d mirrored from c's role: on the bisector of be
  Rational mx = (cfg.b.x + cfg.e.x) / 2, my = (cfg.b.y + cfg.e.y) / 2;
  Rational dirx = cfg.b.y, diry = cfg.e.x - cfg.b.x;
  Rational s = make_rational(1, 5);
  cfg.d = {mx + s * dirx, my + s * diry};
  REQUIRE(tech_premises_hold(cfg));
  CHECK(check_tech(cfg).verdict == Verdict::Holds);
}

TEST_CASE("check_tech skips on junk input") {
  TechConfig cfg;
  cfg.a = pt(0, 0);
  cfg.b = pt(1, 0);
  cfg.c = pt(2, 0);
  cfg.d = pt(3, 0);
  cfg.e = pt(4, 0);
  CHECK(check_tech(cfg).verdict == Verdict::Skip);
}

TEST_CASE("check_sequence_bound on dense grids") {
  for (long long t : {2, 3, 5, 8, 10}) {
    std::vector<long long> mults;
    for (long long k = 0; k < 2 * t; ++k) mults.push_back(k);
    ExactInstance inst = rotation_arc(mults, max_rotation_scale(2 * t - 1));
    CheckResult r = check_sequence_bound(whole_cap(inst));
    CHECK(r.verdict == Verdict::Holds);
  }
  auto tri = ExactInstance::from_points({pt(-1, 0), pt(0, 1), pt(1, 0)});
  CHECK_THROWS_AS(check_sequence_bound(whole_cap(tri)), std::invalid_argument);
}

TEST_CASE("small campaigns run clean") {
  for (const char* suite :
       {"monotone", "tech", "half-easy", "sequence", "corollaries", "altman",
        "szemeredi"}) {
    CampaignReport r = run_campaign(suite, 40, 123);
    CHECK(r.trials == 40);
    CHECK(r.violations == 0);
    CHECK(r.holds + r.skips + r.violations == 40);
    CHECK(r.violation_seeds.empty());
    CHECK(r.skips == r.skip_seeds.size());
  }
  CHECK_THROWS_AS(run_campaign("nope", 1, 1), std::invalid_argument);
}

TEST_CASE("campaign reports are deterministic") {
  CampaignReport a = run_campaign("monotone", 60, 5, 1);
  CampaignReport b = run_campaign("monotone", 60, 5, 2);
  CHECK(campaign_report_json(a) == campaign_report_json(b));
}
