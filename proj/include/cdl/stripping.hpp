#pragma once

#include <string>
#include <vector>

#include "cdl/instance.hpp"

namespace cdl {

// Iterated removal of the enclosing-circle support, with the two-case
// classification against the step-1 support at circular-distance threshold
// a*n. The procedure stops early at the first step (>= 2) where some
// support point is at least a*n away from all three original ones.
struct StripStep {
  size_t iteration = 0;            // 1-based
  size_t size_before = 0;
  std::vector<size_t> support;     // original instance indices
};

struct StripTrace {
  size_t n = 0;
  Rational a, d;
  size_t planned_steps = 0;
  std::vector<StripStep> steps;
  bool case1 = false;
  size_t case1_step = 0;           // valid when case1
  size_t far_point = 0;            // original index, valid when case1
};

StripTrace strip_procedure(const ExactInstance& inst, const Rational& a,
                           const Rational& d);
std::string strip_trace_json(const StripTrace& t);

// Exact finite sum over the planned steps, sum_{i=1}^{floor(d n)} (n - 6i);
// its n^2 coefficient d - 3d^2 feeds case2_coefficient.
mpz_class stripping_edge_sum(size_t n, const Rational& d);

// The n^2 coefficients of the two good-edge counts, exact in the
// parameters. Case 1 comes in two readings, (1-d)^2/12 and (1-3d)^2/12;
// only the former clears 1/11.981 at the reference point (5/44, 1/1132),
// so both are exposed and every report names its variant.
enum class Case1Variant { Final, Conservative };
const char* case1_variant_name(Case1Variant v);

Rational case1_coefficient(const Rational& a, const Rational& d,
                           Case1Variant variant);
Rational case2_coefficient(const Rational& a, const Rational& d);

struct BoundReport {
  Rational case1, case2, min_coefficient;
  Case1Variant variant = Case1Variant::Final;
};
BoundReport bound_report(const Rational& a, const Rational& d,
                         Case1Variant variant);
std::string bound_report_json(const BoundReport& r);

// Coarse lattice plus local refinement over (0,1) x (0,1/3), exact
// rationals throughout; the reference point (5/44, 1/1132) is always a
// candidate and its clearance of 1000/11981 is certified on the side.
struct OptimizeResult {
  Rational a, d, min_coefficient;
  bool reference_point_certified = false;
  unsigned resolution = 0;
};
OptimizeResult optimize_parameters(unsigned resolution, unsigned threads = 0);
std::string optimize_result_json(const OptimizeResult& r);

// alpha = 1 - 1000/11981 pushed through (2-alpha)/3, reported as the exact
// excess over 13/36.
struct EpsilonChain {
  Rational alpha;
  Rational coefficient;
  Rational excess;
};
EpsilonChain epsilon_chain();

}  // namespace cdl
