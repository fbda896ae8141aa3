#pragma once

#include <optional>
#include <vector>

#include "cdl/caps.hpp"
#include "cdl/constructions.hpp"

namespace cdl {

// t red negative and t blue positive numbers, each side distinct.
struct Ap3Instance {
  std::vector<Rational> red;   // ascending, all < 0
  std::vector<Rational> blue;  // ascending, all > 0

  static Ap3Instance make(std::vector<Rational> red, std::vector<Rational> blue);
  size_t t() const { return red.size(); }
};

// 3-element subsets {x < y < z} of R u B with y-x = z-y using both colors.
// Sorted bichromatic progressions always have differently colored ends
// (checked), which is what ties them to cap edges straddling the color split.
unsigned long long count_bichromatic_ap3(const Ap3Instance& inst);

// Exhaustive maximum over integer instances R in {-M..-1}, B in {1..M}.
// Rational instances normalize to integers by clearing denominators, so
// integer search is enough. Search space C(M,t)^2 is capped; throws when
// too large.
struct Ap3SearchResult {
  unsigned long long best = 0;
  std::vector<long long> red;
  std::vector<long long> blue;
};
Ap3SearchResult max_bichromatic_ap3(unsigned t, long long value_bound,
                                    unsigned threads = 0);

// The instance mapped onto a circular arc: value v goes to angle
// (v - vmin) * phi on the unit circle with tan(phi/2) = scale per integer
// step after clearing denominators. On an arc under a semicircle a point is
// equidistant from two others exactly when its value is their midpoint, so
// edges straddling the split with a witness in the cap are exactly the
// bichromatic 3-APs.
struct ArcEmbedding {
  ExactInstance instance;
  size_t split;
  Rational scale;

  Cap<ExactKernel> cap() const { return whole_cap(instance); }
};
ArcEmbedding arc_embedding(const Ap3Instance& inst,
                           std::optional<Rational> scale = std::nullopt);

}  // namespace cdl
