#pragma once

#include <string>

#include "cdl/caps.hpp"
#include "cdl/instance.hpp"

namespace cdl {

// Z(P) plus the distance statistics the inequalities run on. Backend and
// eps are recorded so exact and float figures are never mixed silently.
struct CensusReport {
  size_t n = 0;
  unsigned long long z = 0;
  std::vector<size_t> per_point_distinct;
  size_t max_point_distinct = 0;
  size_t total_distinct = 0;
  size_t good_edges = 0;
  unsigned long long equilateral_triples = 0;
  std::string backend;
  double eps = 0.0;
};

std::string census_report_json(const CensusReport& r);

namespace detail {

// Group sizes of squared distances from one apex to the given members
// (singletons included). Sizes sum to members-1.
template <class K>
std::vector<size_t> apex_group_sizes(const ConvexInstance<K>& inst, size_t w) {
  using S = typename K::Scalar;
  const auto& k = inst.kernel();
  std::vector<S> ds;
  ds.reserve(inst.size() - 1);
  for (size_t i = 0; i < inst.size(); ++i)
    if (i != w) ds.push_back(k.sqdist(inst.point(w), inst.point(i)));
  std::sort(ds.begin(), ds.end());
  std::vector<size_t> sizes;
  size_t run = 1;
  for (size_t t = 1; t < ds.size(); ++t) {
    if (k.scalar_eq(ds[t - 1], ds[t])) {
      ++run;
    } else {
      sizes.push_back(run);
      run = 1;
    }
  }
  if (!ds.empty()) sizes.push_back(run);
  return sizes;
}

}  // namespace detail

// Number of apex/base incidences (p, {a,b}) with |pa| = |pb|; an
// equilateral triangle shows up three times, once per apex.
template <class K>
unsigned long long isosceles_census(const ConvexInstance<K>& inst) {
  unsigned long long z = 0;
  auto members = detail::iota_members(inst.size());
  detail::for_each_equidistant_group(
      inst, members, [&](size_t, std::span<const size_t> g) {
        z += static_cast<unsigned long long>(g.size()) * (g.size() - 1) / 2;
      });
  return z;
}

template <class K>
size_t distinct_distances_from(const ConvexInstance<K>& inst, size_t p) {
  if (p >= inst.size())
    throw std::invalid_argument("distinct_distances_from: bad index");
  return detail::apex_group_sizes(inst, p).size();
}

template <class K>
size_t max_point_distinct(const ConvexInstance<K>& inst) {
  size_t best = 0;
  for (size_t p = 0; p < inst.size(); ++p)
    best = std::max(best, distinct_distances_from(inst, p));
  return best;
}

template <class K>
size_t total_distinct(const ConvexInstance<K>& inst) {
  using S = typename K::Scalar;
  const auto& k = inst.kernel();
  std::vector<S> ds;
  for (size_t i = 0; i < inst.size(); ++i)
    for (size_t j = i + 1; j < inst.size(); ++j)
      ds.push_back(k.sqdist(inst.point(i), inst.point(j)));
  std::sort(ds.begin(), ds.end());
  size_t groups = ds.empty() ? 0 : 1;
  for (size_t t = 1; t < ds.size(); ++t)
    if (!k.scalar_eq(ds[t - 1], ds[t])) ++groups;
  return groups;
}

template <class K>
CensusReport census(const ConvexInstance<K>& inst) {
  size_t n = inst.size();
  CensusReport r;
  r.n = n;
  r.backend = K::backend_name();
  r.eps = inst.kernel().eps_value();
  r.per_point_distinct.assign(n, 0);
  for (size_t p = 0; p < n; ++p)
    r.per_point_distinct[p] = detail::apex_group_sizes(inst, p).size();
  r.max_point_distinct =
      *std::max_element(r.per_point_distinct.begin(), r.per_point_distinct.end());
  r.total_distinct = total_distinct(inst);

  const auto& k = inst.kernel();
  std::vector<uint8_t> hits(n * n, 0);
  unsigned long long equilateral_incidences = 0;
  auto members = detail::iota_members(n);
  detail::for_each_equidistant_group(
      inst, members, [&](size_t w, std::span<const size_t> g) {
        r.z += static_cast<unsigned long long>(g.size()) * (g.size() - 1) / 2;
        auto leg = k.sqdist(inst.point(w), inst.point(g[0]));
        for (size_t a = 0; a < g.size(); ++a)
          for (size_t b = a + 1; b < g.size(); ++b) {
            size_t lo = std::min(g[a], g[b]), hi = std::max(g[a], g[b]);
            uint8_t& h = hits[lo * n + hi];
            if (h < 3) ++h;
            if (k.scalar_eq(k.sqdist(inst.point(g[a]), inst.point(g[b])), leg))
              ++equilateral_incidences;
          }
      });
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      internal_check(hits[i * n + j] <= 2,
                     "convex position admits at most 2 equidistant points");
      if (hits[i * n + j] <= 1) ++r.good_edges;
    }
  internal_check(equilateral_incidences % 3 == 0,
                 "equilateral incidences come in threes");
  r.equilateral_triples = equilateral_incidences / 3;
  return r;
}

// The two sides of the double count: per point, the equidistant pairs are
// at least what the balanced split over its circles gives (convexity of
// m -> m(m-1)/2); globally Z <= 2 C(n,2). Slacks are reported; `holds`
// means both directions check out.
struct SzemerediVerdict {
  bool holds = false;
  unsigned long long z = 0;
  long long global_slack = 0;
  long long min_point_slack = 0;
  size_t worst_point = 0;
};

template <class K>
SzemerediVerdict szemeredi_check(const ConvexInstance<K>& inst) {
  size_t n = inst.size();
  SzemerediVerdict v;
  v.z = isosceles_census(inst);
  v.global_slack = static_cast<long long>(n) * (n - 1) -
                   static_cast<long long>(v.z);
  bool per_point_ok = true;
  bool first = true;
  for (size_t p = 0; p < n; ++p) {
    auto sizes = detail::apex_group_sizes(inst, p);
    size_t kp = sizes.size();
    unsigned long long zp = 0;
    for (size_t m : sizes) zp += static_cast<unsigned long long>(m) * (m - 1) / 2;
    size_t q = (n - 1) / kp, rem = (n - 1) % kp;
    unsigned long long bound =
        static_cast<unsigned long long>(rem) * (q + 1) * q / 2 +
        static_cast<unsigned long long>(kp - rem) * q * (q - 1) / 2;
    long long slack = static_cast<long long>(zp) - static_cast<long long>(bound);
    if (first || slack < v.min_point_slack) {
      v.min_point_slack = slack;
      v.worst_point = p;
      first = false;
    }
    if (slack < 0) per_point_ok = false;
  }
  v.holds = per_point_ok && v.global_slack >= 0;
  return v;
}

// Z(P) <= 2 C(n,2) - #good for convex instances: a good edge is the base
// of at most one isosceles triangle.
struct DeductionVerdict {
  bool holds = false;
  unsigned long long z = 0;
  size_t good_edges = 0;
  long long slack = 0;
};

template <class K>
DeductionVerdict good_edge_deduction(const ConvexInstance<K>& inst) {
  DeductionVerdict v;
  size_t n = inst.size();
  v.z = isosceles_census(inst);
  v.good_edges = good_edge_count(inst);
  v.slack = static_cast<long long>(n) * (n - 1) -
            static_cast<long long>(v.good_edges) - static_cast<long long>(v.z);
  v.holds = v.slack >= 0;
  return v;
}

// (2 - alpha)/3: turns an upper bound Z <= alpha n^2 + O(n) into the
// distinct-distance coefficient from one point.
Rational improvement_coefficient(const Rational& alpha);

}  // namespace cdl
