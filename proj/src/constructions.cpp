#include "cdl/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace cdl {

FloatInstance regular_ngon(unsigned n, double eps) {
  if (n < 3) throw std::invalid_argument("regular_ngon: n >= 3 required");
  std::vector<FloatPoint> pts;
  pts.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    double a = 2.0 * std::numbers::pi * k / n;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  return FloatInstance::from_points(std::move(pts), FloatKernel{eps});
}

FloatInstance quarter_arc_with_center(unsigned n, double eps) {
  if (n < 4) throw std::invalid_argument("quarter_arc_with_center: n >= 4");
  std::vector<FloatPoint> pts;
  pts.reserve(n);
  unsigned arc_points = n - 1;
  for (unsigned k = 0; k < arc_points; ++k) {
    double a = (std::numbers::pi / 2.0) * k / (arc_points - 1);
    pts.push_back({std::cos(a), std::sin(a)});
  }
  pts.push_back({0.0, 0.0});
  return FloatInstance::from_points(std::move(pts), FloatKernel{eps});
}

ArcCensus symbolic_arc_census(unsigned long m, bool include_center,
                              const Rational& arc_fraction) {
  if (m < 2) throw std::invalid_argument("symbolic_arc_census: m >= 2");
  if (arc_fraction <= 0 || arc_fraction > 1)
    throw std::invalid_argument(
        "symbolic_arc_census: arc fraction must be in (0, 1]");
  ArcCensus out;
  for (unsigned long j = 0; j < m; ++j)
    out.z += std::min(j, m - 1 - j);
  if (include_center) {
    out.z += static_cast<unsigned long long>(m) * (m - 1) / 2;
    // chord(g0 * step) == radius <=> g0 * arc/(m-1) == pi/3
    Rational g0 = Rational(static_cast<long>(m - 1)) / (Rational(3) * arc_fraction);
    if (g0.get_den() == 1 && g0 >= 1 && g0 <= static_cast<long>(m - 1)) {
      unsigned long g = g0.get_num().get_ui();
      out.z += 2ull * (m - g);
      out.equilateral_triples = m - g;
    }
  }
  return out;
}

ExactInstance rational_concyclic(std::vector<Rational> params) {
  if (params.size() < 3)
    throw std::invalid_argument("rational_concyclic: need >= 3 parameters");
  std::sort(params.begin(), params.end());
  for (size_t i = 1; i < params.size(); ++i)
    if (params[i - 1] == params[i])
      throw std::invalid_argument("rational_concyclic: duplicate parameters");
  std::vector<Point> pts;
  pts.reserve(params.size());
  for (const Rational& t : params) {
    Rational denom = 1 + t * t;
    pts.push_back({(1 - t * t) / denom, (2 * t) / denom});
  }
  return ExactInstance::from_points(std::move(pts));
}

Rational max_rotation_scale(long long spread) {
  if (spread < 1) throw std::invalid_argument("max_rotation_scale: spread >= 1");
  return Rational(3) / make_rational(2 * spread);
}

ExactInstance rotation_arc(std::vector<long long> multiples,
                           const Rational& scale) {
  if (multiples.size() < 2)
    throw std::invalid_argument("rotation_arc: need >= 2 multiples");
  if (scale <= 0) throw std::invalid_argument("rotation_arc: scale > 0");
  std::sort(multiples.begin(), multiples.end());
  for (size_t i = 1; i < multiples.size(); ++i)
    if (multiples[i - 1] == multiples[i])
      throw std::invalid_argument("rotation_arc: duplicate multiples");
  long long spread = multiples.back() - multiples.front();
  // phi = 2*atan(scale) <= 2*scale, so spread*2*scale <= 3 < pi keeps the
  // whole arc under a semicircle
  if (make_rational(2 * spread) * scale > 3)
    throw std::invalid_argument(
        "rotation_arc: scale too large, arc exceeds a semicircle");
  Rational denom = 1 + scale * scale;
  Rational c = (1 - scale * scale) / denom;
  Rational s = (2 * scale) / denom;
  std::vector<Point> powers;
  powers.reserve(spread + 1);
  powers.push_back({Rational(1), Rational(0)});
  for (long long k = 1; k <= spread; ++k) {
    const Point& p = powers.back();
    powers.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
  }
  std::vector<Point> pts;
  pts.reserve(multiples.size());
  for (long long mu : multiples) pts.push_back(powers[mu - multiples.front()]);
  return ExactInstance::from_points(std::move(pts));
}

namespace {

ExactInstance random_concyclic_instance(unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-4LL * n * n, 4LL * n * n);
  std::uniform_int_distribution<long long> den(1, 32);
  std::set<Rational> params;
  while (params.size() < n) params.insert(make_rational(num(rng), den(rng)));
  return rational_concyclic(std::vector<Rational>(params.begin(), params.end()));
}

// Sorted-vector-sum construction: turn two sorted coordinate samples into
// edge vectors, order them by angle, and walk. Integer grid throughout.
ExactInstance random_valtr_instance(unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> coord(0, 1000000);
  std::uniform_int_distribution<int> coin(0, 1);
  auto sample_distinct = [&](unsigned count) {
    std::set<long long> vals;
    while (vals.size() < count) vals.insert(coord(rng));
    return std::vector<long long>(vals.begin(), vals.end());
  };
  auto deltas = [&](const std::vector<long long>& v) {
    std::vector<long long> d;
    long long top = v.front(), bot = v.front();
    for (size_t k = 1; k + 1 < v.size(); ++k) {
      if (coin(rng)) {
        d.push_back(v[k] - top);
        top = v[k];
      } else {
        d.push_back(bot - v[k]);
        bot = v[k];
      }
    }
    d.push_back(v.back() - top);
    d.push_back(bot - v.back());
    return d;
  };
  std::vector<long long> vx = deltas(sample_distinct(n));
  std::vector<long long> vy = deltas(sample_distinct(n));
  std::shuffle(vy.begin(), vy.end(), rng);

  std::vector<std::pair<long long, long long>> vecs(n);
  for (unsigned k = 0; k < n; ++k) vecs[k] = {vx[k], vy[k]};
  auto half = [](const std::pair<long long, long long>& v) {
    return (v.second < 0 || (v.second == 0 && v.first < 0)) ? 1 : 0;
  };
  std::sort(vecs.begin(), vecs.end(), [&](const auto& a, const auto& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    __int128 cross = static_cast<__int128>(a.first) * b.second -
                     static_cast<__int128>(a.second) * b.first;
    return cross > 0;
  });

  std::vector<Point> pts;
  pts.reserve(n);
  long long x = 0, y = 0;
  for (unsigned k = 0; k < n; ++k) {
    pts.push_back({Rational(static_cast<long>(x)), Rational(static_cast<long>(y))});
    x += vecs[k].first;
    y += vecs[k].second;
  }
  internal_check(x == 0 && y == 0, "vector sum walk must close");
  return ExactInstance::from_points(std::move(pts));
}

}  // namespace

ExactInstance random_convex(unsigned n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_convex: n >= 3");
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(seed * 1000003ull + attempt);
    try {
      if (seed % 2 == 0) return random_concyclic_instance(n, rng);
      return random_valtr_instance(n, rng);
    } catch (const std::invalid_argument&) {
      // degenerate draw (parallel edge vectors etc.), try again
    }
  }
  throw std::runtime_error("random_convex: exhausted retry budget");
}

}  // namespace cdl
