#include "cdl/checks.hpp"

#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "cdl/constructions.hpp"
#include "cdl/threading.hpp"

namespace cdl {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::Skip: return "SKIP";
  }
  return "?";
}

CheckResult check_monotone(const Cap<ExactKernel>& cap, size_t c_pos) {
  size_t t = cap.size();
  if (c_pos == 0 || c_pos + 1 >= t)
    throw std::invalid_argument("check_monotone: c must be interior");
  auto x = find_witness(cap, 0, c_pos);
  auto y = find_witness(cap, 0, t - 1);
  if (!x || !y) return {Verdict::Skip, "missing witness premise"};
  const auto& inst = cap.instance();
  size_t a = cap.endpoint_a();
  size_t off_x = inst.offset(a, *x), off_y = inst.offset(a, *y);
  std::ostringstream os;
  os << "witness offsets from a: x=" << off_x << " y=" << off_y;
  if (*x != *y && off_x < off_y) return {Verdict::Holds, os.str()};
  return {Verdict::Violated, os.str()};
}

CheckResult check_half_easy(const Cap<ExactKernel>& cap) {
  size_t t = cap.size();
  size_t lacking = 0;
  auto witnessed_in_cap = [&](size_t i, size_t j) {
    auto w = find_witness(cap, i, j);
    return w.has_value() && cap.contains_index(*w);
  };
  for (size_t k = 1; k < t; ++k)
    if (!witnessed_in_cap(0, k)) ++lacking;
  for (size_t k = 1; k + 1 < t; ++k)
    if (!witnessed_in_cap(k, t - 1)) ++lacking;
  std::ostringstream os;
  os << lacking << " of " << (2 * t - 3) << " endpoint edges lack a cap witness"
     << ", need >= " << (t - 1);
  return {lacking >= t - 1 ? Verdict::Holds : Verdict::Violated, os.str()};
}

bool tech_premises_hold(const TechConfig& cfg) {
  const Point pts[5] = {cfg.a, cfg.b, cfg.c, cfg.d, cfg.e};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (pts[i] == pts[j]) return false;
  // clockwise, weakly convex chain
  for (int i = 0; i + 2 < 5; ++i)
    if (orientation(pts[i], pts[i + 1], pts[i + 2]) ==
        Orientation::CounterClockwise)
      return false;
  ExactKernel k;
  if (!is_cap<ExactKernel>(std::span<const Point>(pts, 5), k)) return false;
  return on_bisector(cfg.c, cfg.a, cfg.e) && on_bisector(cfg.d, cfg.b, cfg.e);
}

CheckResult check_tech(const TechConfig& cfg) {
  if (!tech_premises_hold(cfg)) return {Verdict::Skip, "premises not met"};
  Rational ab = squared_distance(cfg.a, cfg.b);
  Rational cd = squared_distance(cfg.c, cfg.d);
  std::ostringstream os;
  os << "|ab|^2=" << to_string(ab) << " |cd|^2=" << to_string(cd);
  return {ab > cd ? Verdict::Holds : Verdict::Violated, os.str()};
}

namespace {

Rational random_fraction(std::mt19937_64& rng, long lo_num, long hi_num,
                         long hi_den) {
  std::uniform_int_distribution<long> num(lo_num, hi_num);
  std::uniform_int_distribution<long> den(1, hi_den);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TechConfig sample_tech_config(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bool degenerate = seed % 8 == 0;  // exercise the weakly convex case too
  for (int attempt = 0; attempt < 600; ++attempt) {
    TechConfig cfg;
    cfg.a = {Rational(-1), Rational(0)};
    cfg.e = {Rational(1), Rational(0)};
    // c on the bisector x = 0, inside the unit disk
    std::uniform_int_distribution<long> den(2, 16);
    long q = den(rng);
    std::uniform_int_distribution<long> num(1, q);
    Rational h = make_rational(num(rng), q);
    cfg.c = {Rational(0), h};
    if (degenerate) {
      // b on the segment ac
      long bq = den(rng);
      std::uniform_int_distribution<long> bnum(1, bq - 1);
      Rational lam = make_rational(bnum(rng), bq);
      cfg.b = {cfg.a.x + lam * (cfg.c.x - cfg.a.x),
               cfg.a.y + lam * (cfg.c.y - cfg.a.y)};
    } else {
      std::uniform_int_distribution<long> bx(-15, -1), by(1, 12);
      cfg.b = {make_rational(bx(rng), 16), make_rational(by(rng), 16)};
    }
    // d on the bisector of be: midpoint + s * rot90(e - b)
    Rational mx = (cfg.b.x + cfg.e.x) / 2, my = (cfg.b.y + cfg.e.y) / 2;
    Rational dirx = cfg.b.y;  // rot90(e - b) = (by, ex - bx)
    Rational diry = cfg.e.x - cfg.b.x;
    Rational s = random_fraction(rng, 1, 8, 48);
    cfg.d = {mx + s * dirx, my + s * diry};
    if (tech_premises_hold(cfg)) return cfg;
  }
  throw std::runtime_error("sample_tech_config: rejection budget exhausted");
}

CheckResult check_sequence_bound(const Cap<ExactKernel>& cap) {
  size_t size = cap.size();
  if (size % 2 != 0)
    throw std::invalid_argument("check_sequence_bound: cap size must be even");
  size_t t = size / 2;
  auto edges = witnessed_straddling_edge_list(cap, t);
  std::vector<size_t> degree(size, 0);
  for (const auto& e : edges) {
    ++degree[e[0]];
    ++degree[e[1]];
  }
  // consecutive segments except the junction, sorted by length
  std::vector<std::pair<Rational, size_t>> segments;
  for (size_t k = 0; k + 1 < size; ++k) {
    if (k == t - 1) continue;
    segments.emplace_back(
        cap.instance().kernel().sqdist(cap.point(k), cap.point(k + 1)), k);
  }
  std::sort(segments.begin(), segments.end());
  for (size_t i = 0; i < segments.size(); ++i) {
    size_t k = segments[i].second;
    size_t dsum = degree[k] + degree[k + 1];
    if (dsum > t + (i + 1)) {
      std::ostringstream os;
      os << "segment " << i + 1 << " has degree sum " << dsum << " > "
         << t + (i + 1);
      return {Verdict::Violated, os.str()};
    }
  }
  std::ostringstream os;
  os << edges.size() << " straddling witnessed edges, cap " << (7 * t * t + t)
     << "/8";
  if (8 * edges.size() > 7 * t * t + t) return {Verdict::Violated, os.str()};
  return {Verdict::Holds, os.str()};
}

// ---------------------------------------------------------------------------
// Campaigns. Each trial derives its own rng from (seed, trial index), so
// results do not depend on the worker count.

namespace {

struct TrialOutcome {
  Verdict verdict;
};

// cap on a rational-rotation grid with witnesses forced for the edges
// (a, b) and (a, c); returns the instance and the cap position of c
std::pair<ExactInstance, size_t> monotone_fixture(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> half_b(3, 30);
  long long b = 2 * half_b(rng);  // even, so b/2 is a grid point
  std::set<long long> mults = {0, b, b / 2};
  std::uniform_int_distribution<long long> inner(1, b - 1);
  long long c = 2 * std::uniform_int_distribution<long long>(1, b / 2 - 1)(rng);
  mults.insert(c);
  mults.insert(c / 2);
  std::uniform_int_distribution<int> extra(0, 4);
  for (int k = extra(rng); k > 0; --k) mults.insert(inner(rng));
  std::vector<long long> m(mults.begin(), mults.end());
  long long spread = m.back() - m.front();
  ExactInstance inst = rotation_arc(m, max_rotation_scale(spread));
  size_t c_pos = std::find(m.begin(), m.end(), c) - m.begin();
  return {std::move(inst), c_pos};
}

Verdict monotone_trial(std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  if (trial_seed % 5 == 0) {
    // occasional unforced cap: witnesses usually absent, honest SKIP
    std::uniform_int_distribution<unsigned> nd(5, 9);
    ExactInstance inst = random_convex(nd(rng), trial_seed);
    auto caps = cap_decomposition(inst);
    for (const auto& cap : caps) {
      if (cap.size() < 3) continue;
      return check_monotone(cap, 1 + rng() % (cap.size() - 2)).verdict;
    }
    return Verdict::Skip;
  }
  auto [inst, c_pos] = monotone_fixture(rng);
  auto cap = whole_cap(inst);
  if (c_pos == 0 || c_pos + 1 >= cap.size()) return Verdict::Skip;
  return check_monotone(cap, c_pos).verdict;
}

Verdict tech_trial(std::uint64_t trial_seed) {
  try {
    return check_tech(sample_tech_config(trial_seed)).verdict;
  } catch (const std::runtime_error&) {
    return Verdict::Skip;
  }
}

Verdict half_easy_trial(std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  std::uniform_int_distribution<unsigned> nd(6, 40);
  ExactInstance inst = random_convex(nd(rng), trial_seed);
  for (const auto& cap : cap_decomposition(inst))
    if (check_half_easy(cap).verdict == Verdict::Violated)
      return Verdict::Violated;
  return Verdict::Holds;
}

Verdict sequence_trial(std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  std::uniform_int_distribution<size_t> td(2, 30);
  size_t t = td(rng);
  if (trial_seed % 4 == 0) {
    // sparse tan-half-angle cap on the first quadrant: few or no witnesses
    std::set<Rational> params;
    std::uniform_int_distribution<long> num(0, 40);
    std::uniform_int_distribution<long> den(40, 60);
    while (params.size() < 2 * t) params.insert(make_rational(num(rng), den(rng)));
    ExactInstance inst =
        rational_concyclic(std::vector<Rational>(params.begin(), params.end()));
    return check_sequence_bound(whole_cap(inst)).verdict;
  }
  // dense grid: witnesses at midpoints abound
  std::set<long long> mults;
  std::uniform_int_distribution<long long> pick(0, static_cast<long long>(3 * t));
  while (mults.size() < 2 * t) mults.insert(pick(rng));
  std::vector<long long> m(mults.begin(), mults.end());
  ExactInstance inst = rotation_arc(m, max_rotation_scale(m.back() - m.front()));
  return check_sequence_bound(whole_cap(inst)).verdict;
}

Verdict corollaries_trial(std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  std::uniform_int_distribution<unsigned> nd(10, 100);
  unsigned n = nd(rng);
  ExactInstance inst = random_convex(n, trial_seed);
  for (const auto& cap : cap_decomposition(inst)) {
    size_t w = witnessed_edges_in_cap(cap);  // asserts w <= t^2/4 internally
    if (4 * w > cap.size() * cap.size()) return Verdict::Violated;
  }
  if (12 * good_edge_count(inst) < static_cast<size_t>(n) * n)
    return Verdict::Violated;
  if (!good_edge_deduction(inst).holds) return Verdict::Violated;
  return Verdict::Holds;
}

Verdict altman_trial(std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  std::uniform_int_distribution<unsigned> nd(3, 80);
  unsigned n = nd(rng);
  ExactInstance inst = random_convex(n, trial_seed);
  return total_distinct(inst) >= n / 2 ? Verdict::Holds : Verdict::Violated;
}

Verdict szemeredi_trial(std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  std::uniform_int_distribution<unsigned> nd(3, 100);
  unsigned n = nd(rng);
  ExactInstance inst = random_convex(n, trial_seed);
  return szemeredi_check(inst).holds ? Verdict::Holds : Verdict::Violated;
}

}  // namespace

std::string campaign_report_json(const CampaignReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["trials"] = r.trials;
  j["holds"] = r.holds;
  j["skips"] = r.skips;
  j["violations"] = r.violations;
  j["violation_seeds"] = r.violation_seeds;
  j["skip_seeds"] = r.skip_seeds;
  return j.dump(2);
}

CampaignReport run_campaign(const std::string& suite,
                            unsigned long long trials, std::uint64_t seed,
                            unsigned threads) {
  Verdict (*trial)(std::uint64_t) = nullptr;
  if (suite == "monotone") trial = monotone_trial;
  else if (suite == "tech") trial = tech_trial;
  else if (suite == "half-easy") trial = half_easy_trial;
  else if (suite == "sequence") trial = sequence_trial;
  else if (suite == "corollaries") trial = corollaries_trial;
  else if (suite == "altman") trial = altman_trial;
  else if (suite == "szemeredi") trial = szemeredi_trial;
  else throw std::invalid_argument("unknown suite: " + suite);

  struct Block {
    unsigned long long holds = 0, skips = 0, violations = 0;
    std::vector<std::uint64_t> violation_seeds, skip_seeds;
  };
  auto worker = [&](size_t begin, size_t end) {
    Block b;
    for (size_t i = begin; i < end; ++i) {
      std::uint64_t trial_seed = seed + i;
      Verdict v;
      try {
        v = trial(trial_seed);
      } catch (const internal_error&) {
        v = Verdict::Violated;  // a tripped internal invariant is a failure
      }
      switch (v) {
        case Verdict::Holds: ++b.holds; break;
        case Verdict::Skip:
          ++b.skips;
          b.skip_seeds.push_back(trial_seed);
          break;
        case Verdict::Violated:
          ++b.violations;
          b.violation_seeds.push_back(trial_seed);
          break;
      }
    }
    return b;
  };
  auto blocks = parallel_blocks<Block>(trials, threads, worker);
  CampaignReport r;
  r.suite = suite;
  r.trials = trials;
  for (const auto& b : blocks) {
    r.holds += b.holds;
    r.skips += b.skips;
    r.violations += b.violations;
    r.violation_seeds.insert(r.violation_seeds.end(), b.violation_seeds.begin(),
                             b.violation_seeds.end());
    r.skip_seeds.insert(r.skip_seeds.end(), b.skip_seeds.begin(),
                        b.skip_seeds.end());
  }
  return r;
}

}  // namespace cdl
