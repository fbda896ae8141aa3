#pragma once

#include <cstdint>
#include <vector>

#include "cdl/instance.hpp"

namespace cdl {

// Vertices of the regular n-gon on the unit circle (float backend).
FloatInstance regular_ngon(unsigned n, double eps = 1e-9);

// n-1 points evenly spread over a closed quarter of the unit circle plus
// the center, in convex position (float backend). n >= 4.
FloatInstance quarter_arc_with_center(unsigned n, double eps = 1e-9);

// Exact isosceles count of m points evenly spread over a closed arc of
// `arc_fraction * pi` (0 < fraction <= 1), optionally with the center.
// Chords on an arc <= pi depend injectively on the index gap, so bases with
// an arc apex are index 3-APs, the center is equidistant from everything,
// and center-leg coincidences happen at the single gap whose chord equals
// the radius.
struct ArcCensus {
  unsigned long long z = 0;
  unsigned long long equilateral_triples = 0;
};
ArcCensus symbolic_arc_census(unsigned long m, bool include_center,
                              const Rational& arc_fraction);

// Exactly concyclic rational points (1-t^2, 2t)/(1+t^2) for the given
// distinct parameters, in increasing-angle order (exact backend).
ExactInstance rational_concyclic(std::vector<Rational> params);

// Exactly concyclic rational points at angles k*phi for the given integer
// multiples, where tan(phi/2) = scale. Multiples are shifted so the
// smallest maps to angle 0; the full spread must stay within a semicircle
// (2*scale*spread <= 3 suffices since atan(u) <= u), which keeps chord
// length injective in the index gap and makes witnesses coincide with
// multiple midpoints.
ExactInstance rotation_arc(std::vector<long long> multiples,
                           const Rational& scale);

// Largest scale rotation_arc accepts for a given spread.
Rational max_rotation_scale(long long spread);

// Seeded random convex instance: even seeds draw random concyclic
// parameters, odd seeds run the sorted-vector-sum construction on an
// integer grid. Deterministic per seed.
ExactInstance random_convex(unsigned n, std::uint64_t seed);

}  // namespace cdl
