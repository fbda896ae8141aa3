#pragma once

#include <cstdint>
#include <string>

#include "cdl/ap3.hpp"
#include "cdl/caps.hpp"
#include "cdl/census.hpp"

namespace cdl {

// Checker outcomes. The checked statements are theorems on exact input, so
// Violated there means an implementation bug and fails the build; Skip
// records unmet premises without counting as coverage.
enum class Verdict { Holds, Violated, Skip };
const char* verdict_name(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::Skip;
  std::string detail;
};

// Witness ordering: if x witnesses (a, c) and y witnesses (a, b) in a cap
// with endpoints a and b, then x comes strictly before y walking from a,
// and x != y. c_pos must be an interior cap position.
CheckResult check_monotone(const Cap<ExactKernel>& cap, size_t c_pos);

// Of the 2t-3 edges adjacent to a cap endpoint, at least t-1 have no
// witness inside the cap.
CheckResult check_half_easy(const Cap<ExactKernel>& cap);

// Five points of a cap in clockwise order where c certifies the bisector
// of ae and d the bisector of be. Weakly convex chains are allowed (b may
// sit on segment ac).
struct TechConfig {
  Point a, b, c, d, e;
};
bool tech_premises_hold(const TechConfig& cfg);

// Constructive sampler: c and d are placed on the (rational) bisector
// lines, so the certificates hold exactly; the open-condition constraints
// are rejection-sampled. Throws after exhausting the retry budget.
TechConfig sample_tech_config(std::uint64_t seed);

// |ab| > |cd|, strictly; a tie counts as Violated.
CheckResult check_tech(const TechConfig& cfg);

// For a cap of size 2t: sorts the consecutive segments (skipping the
// middle junction) by length and checks d(u_i)+d(v_i) <= t+i against the
// straddling witnessed-edge graph, plus the aggregate (7t^2+t)/8 cap.
CheckResult check_sequence_bound(const Cap<ExactKernel>& cap);

struct CampaignReport {
  std::string suite;
  unsigned long long trials = 0;
  unsigned long long holds = 0;
  unsigned long long skips = 0;
  unsigned long long violations = 0;
  std::vector<std::uint64_t> violation_seeds;
  std::vector<std::uint64_t> skip_seeds;
};
std::string campaign_report_json(const CampaignReport& r);

CampaignReport run_campaign(const std::string& suite, unsigned long long trials,
                            std::uint64_t seed, unsigned threads = 0);

}  // namespace cdl
