#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cdl {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through the
// helpers below; raw mpq_class(num, den) does NOT canonicalize.
using Rational = mpq_class;

Rational make_rational(long long num, long long den = 1);

// Parses "p/q", "p", or a plain decimal like "0.125" (exact).
Rational rational_from_string(std::string_view s);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

// True iff numerator and denominator both fit in int64.
bool fits_int64(const Rational& q);

}  // namespace cdl
