#include "cdl/ap3.hpp"

#include <algorithm>
#include <cmath>

#include "cdl/threading.hpp"

namespace cdl {

Ap3Instance Ap3Instance::make(std::vector<Rational> red,
                              std::vector<Rational> blue) {
  if (red.empty() || red.size() != blue.size())
    throw std::invalid_argument("ap3: need |red| == |blue| >= 1");
  std::sort(red.begin(), red.end());
  std::sort(blue.begin(), blue.end());
  for (size_t i = 1; i < red.size(); ++i)
    if (red[i - 1] == red[i] || blue[i - 1] == blue[i])
      throw std::invalid_argument("ap3: duplicate values");
  if (red.back() >= 0) throw std::invalid_argument("ap3: red values must be < 0");
  if (blue.front() <= 0)
    throw std::invalid_argument("ap3: blue values must be > 0");
  return Ap3Instance{std::move(red), std::move(blue)};
}

unsigned long long count_bichromatic_ap3(const Ap3Instance& inst) {
  // merged ascending values; reds sort strictly below blues
  std::vector<Rational> all = inst.red;
  all.insert(all.end(), inst.blue.begin(), inst.blue.end());
  size_t t = inst.t();
  auto color = [&](size_t idx) { return idx < t ? 0 : 1; };
  unsigned long long count = 0;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      Rational mid = (all[i] + all[j]) / 2;
      auto it = std::lower_bound(all.begin(), all.end(), mid);
      if (it == all.end() || *it != mid) continue;
      size_t k = static_cast<size_t>(it - all.begin());
      if (k == i || k == j) continue;
      if (color(i) == color(j) && color(j) == color(k)) continue;
      internal_check(color(i) != color(j),
                     "bichromatic progression ends must differ in color");
      ++count;
    }
  return count;
}

namespace {

// next t-combination of {0..m-1} in lexicographic order
bool next_combination(std::vector<int>& c, int m) {
  int t = static_cast<int>(c.size());
  for (int i = t - 1; i >= 0; --i) {
    if (c[i] < m - (t - i)) {
      ++c[i];
      for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

unsigned long long count_integer_instance(const std::vector<long long>& vals,
                                          std::vector<char>& present,
                                          long long bound) {
  for (long long v : vals) present[v + bound] = 1;
  unsigned long long count = 0;
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = i + 1; j < vals.size(); ++j) {
      long long s = vals[i] + vals[j];
      if (s & 1) continue;
      long long mid = s / 2;
      if (mid == vals[i] || mid == vals[j]) continue;
      if (!present[mid + bound]) continue;
      bool all_neg = vals[i] < 0 && vals[j] < 0 && mid < 0;
      bool all_pos = vals[i] > 0 && vals[j] > 0 && mid > 0;
      if (!all_neg && !all_pos) ++count;
    }
  for (long long v : vals) present[v + bound] = 0;
  return count;
}

}  // namespace

Ap3SearchResult max_bichromatic_ap3(unsigned t, long long value_bound,
                                    unsigned threads) {
  if (t < 1) throw std::invalid_argument("max_bichromatic_ap3: t >= 1");
  if (value_bound < static_cast<long long>(t))
    throw std::invalid_argument("max_bichromatic_ap3: bound >= t");
  double combos = 1.0;
  for (unsigned i = 0; i < t; ++i)
    combos = combos * static_cast<double>(value_bound - i) / (i + 1);
  if (combos * combos > 4e8)
    throw std::invalid_argument(
        "max_bichromatic_ap3: search space too large (C(bound,t)^2 capped at 4e8)");

  // all t-subsets of {1..bound} as sorted value lists
  std::vector<std::vector<long long>> subsets;
  std::vector<int> comb(t);
  for (unsigned i = 0; i < t; ++i) comb[i] = static_cast<int>(i);
  do {
    std::vector<long long> vals(t);
    for (unsigned i = 0; i < t; ++i) vals[i] = comb[i] + 1;
    subsets.push_back(std::move(vals));
  } while (next_combination(comb, static_cast<int>(value_bound)));

  struct Local {
    unsigned long long best = 0;
    size_t red_idx = 0, blue_idx = 0;
    bool any = false;
  };
  auto worker = [&](size_t begin, size_t end) {
    Local loc;
    std::vector<char> present(2 * value_bound + 1, 0);
    std::vector<long long> merged(2 * t);
    for (size_t ri = begin; ri < end; ++ri) {
      for (size_t bi = 0; bi < subsets.size(); ++bi) {
        for (unsigned i = 0; i < t; ++i) merged[i] = -subsets[ri][t - 1 - i];
        for (unsigned i = 0; i < t; ++i) merged[t + i] = subsets[bi][i];
        unsigned long long c = count_integer_instance(merged, present, value_bound);
        if (!loc.any || c > loc.best ||
            (c == loc.best && std::make_pair(ri, bi) <
                                  std::make_pair(loc.red_idx, loc.blue_idx))) {
          loc = {c, ri, bi, true};
        }
      }
    }
    return loc;
  };
  std::vector<Local> partials =
      parallel_blocks<Local>(subsets.size(), threads, worker);

  Local best;
  for (const Local& loc : partials) {
    if (!loc.any) continue;
    if (!best.any || loc.best > best.best ||
        (loc.best == best.best &&
         std::make_pair(loc.red_idx, loc.blue_idx) <
             std::make_pair(best.red_idx, best.blue_idx)))
      best = loc;
  }
  internal_check(best.any, "empty search");

  Ap3SearchResult out;
  out.best = best.best;
  for (unsigned i = 0; i < t; ++i)
    out.red.push_back(-subsets[best.red_idx][t - 1 - i]);
  out.blue = subsets[best.blue_idx];
  // the straddling-edge bound caps bichromatic progressions as well
  internal_check(8 * out.best <= 7ull * t * t + t,
                 "3-AP maximum exceeds (7t^2+t)/8");
  return out;
}

ArcEmbedding arc_embedding(const Ap3Instance& inst,
                           std::optional<Rational> scale) {
  std::vector<Rational> all = inst.red;
  all.insert(all.end(), inst.blue.begin(), inst.blue.end());

  // clear denominators: positive scaling keeps the progression structure
  mpz_class lcm = 1;
  for (const Rational& v : all)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<long long> ints;
  ints.reserve(all.size());
  for (const Rational& v : all) {
    mpz_class w = v.get_num() * (lcm / v.get_den());
    if (!w.fits_slong_p())
      throw std::invalid_argument("arc_embedding: values too large");
    ints.push_back(w.get_si());
  }
  long long spread = ints.back() - ints.front();
  Rational sc = scale.value_or(max_rotation_scale(spread));
  ArcEmbedding out{rotation_arc(ints, sc), inst.t(), sc};
  return out;
}

}  // namespace cdl
