#include "cdl/stripping.hpp"

#include <json.hpp>

#include "cdl/census.hpp"
#include "cdl/enclosing.hpp"
#include "cdl/threading.hpp"

namespace cdl {

StripTrace strip_procedure(const ExactInstance& inst, const Rational& a,
                           const Rational& d) {
  if (a <= 0 || a >= 1 || d <= 0 || d >= 1)
    throw std::invalid_argument("strip_procedure: a, d must lie in (0,1)");
  size_t n = inst.size();
  Rational dn = d * make_rational(static_cast<long long>(n));
  mpz_class planned = dn.get_num() / dn.get_den();  // floor, dn > 0
  if (planned < 1)
    throw std::invalid_argument("strip_procedure: d*n < 1, nothing to strip");

  StripTrace trace;
  trace.n = n;
  trace.a = a;
  trace.d = d;
  trace.planned_steps = planned.get_ui();
  Rational threshold = a * make_rational(static_cast<long long>(n));

  std::vector<size_t> alive(n);
  for (size_t i = 0; i < n; ++i) alive[i] = i;

  std::vector<size_t> first_support;
  for (size_t step = 1; step <= trace.planned_steps; ++step) {
    if (alive.size() < 3)
      throw std::invalid_argument("strip_procedure: instance exhausted");
    std::vector<Point> pts;
    pts.reserve(alive.size());
    for (size_t i : alive) pts.push_back(inst.point(i));
    auto [circle, support] = smallest_enclosing_circle<ExactKernel>(
        std::span<const Point>(pts), inst.kernel());
    (void)circle;
    StripStep rec;
    rec.iteration = step;
    rec.size_before = alive.size();
    for (size_t s : support.indices) rec.support.push_back(alive[s]);
    trace.steps.push_back(rec);

    if (step == 1) {
      first_support = rec.support;
    } else {
      for (size_t cand : rec.support) {
        bool far_from_all = true;
        for (size_t f : first_support)
          if (make_rational(static_cast<long long>(
                  circular_distance(cand, f, n))) < threshold) {
            far_from_all = false;
            break;
          }
        if (far_from_all) {
          trace.case1 = true;
          trace.case1_step = step;
          trace.far_point = cand;
          return trace;
        }
      }
    }
    std::vector<size_t> next;
    next.reserve(alive.size());
    for (size_t pos = 0, s = 0; pos < alive.size(); ++pos) {
      if (s < support.indices.size() && support.indices[s] == pos) {
        ++s;
        continue;
      }
      next.push_back(alive[pos]);
    }
    alive = std::move(next);
  }
  return trace;
}

std::string strip_trace_json(const StripTrace& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["a"] = to_string(t.a);
  j["d"] = to_string(t.d);
  j["planned_steps"] = t.planned_steps;
  j["edge_sum"] = stripping_edge_sum(t.n, t.d).get_str();
  j["case"] = t.case1 ? "case1" : "case2";
  if (t.case1) {
    j["case1_step"] = t.case1_step;
    j["far_point"] = t.far_point;
  }
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : t.steps) {
    nlohmann::ordered_json row;
    row["step"] = s.iteration;
    row["size"] = s.size_before;
    row["support"] = s.support;
    steps.push_back(row);
  }
  j["steps"] = steps;
  return j.dump(2);
}

mpz_class stripping_edge_sum(size_t n, const Rational& d) {
  Rational dn = d * make_rational(static_cast<long long>(n));
  if (dn <= 0) throw std::invalid_argument("stripping_edge_sum: d*n must be > 0");
  mpz_class steps = dn.get_num() / dn.get_den();
  mpz_class nn(static_cast<unsigned long>(n));
  return steps * nn - 3 * steps * (steps + 1);
}

const char* case1_variant_name(Case1Variant v) {
  return v == Case1Variant::Final ? "final" : "conservative";
}

Rational case1_coefficient(const Rational& a, const Rational& d,
                           Case1Variant variant) {
  Rational base =
      variant == Case1Variant::Final ? Rational(1 - d) : Rational(1 - 3 * d);
  return base * base / 12 + a * a / 8 - 3 * d / 2;
}

Rational case2_coefficient(const Rational& a, const Rational& d) {
  Rational primary = d - 3 * d * d + (1 - 3 * d) * (1 - 3 * d) / 12 - 3 * d * a;
  Rational simplified = Rational(1) / 12 + d / 2 - 9 * d * d / 4 - 3 * d * a;
  internal_check(primary == simplified, "case 2 simplification identity");
  return primary;
}

BoundReport bound_report(const Rational& a, const Rational& d,
                         Case1Variant variant) {
  BoundReport r;
  r.case1 = case1_coefficient(a, d, variant);
  r.case2 = case2_coefficient(a, d);
  r.min_coefficient = std::min(r.case1, r.case2);
  r.variant = variant;
  return r;
}

std::string bound_report_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["case1_coefficient"] = to_string(r.case1);
  j["case2_coefficient"] = to_string(r.case2);
  j["min_coefficient"] = to_string(r.min_coefficient);
  j["variant"] = case1_variant_name(r.variant);
  j["case1_value"] = to_double(r.case1);
  j["case2_value"] = to_double(r.case2);
  return j.dump(2);
}

namespace {

Rational objective(const Rational& a, const Rational& d) {
  return std::min(case1_coefficient(a, d, Case1Variant::Final),
                  case2_coefficient(a, d));
}

struct Best {
  Rational value, a, d;
  bool any = false;

  void consider(const Rational& v, const Rational& aa, const Rational& dd) {
    if (!any || v > value || (v == value && (aa < a || (aa == a && dd < d)))) {
      value = v;
      a = aa;
      d = dd;
      any = true;
    }
  }
  void merge(const Best& o) {
    if (o.any) consider(o.value, o.a, o.d);
  }
};

}  // namespace

OptimizeResult optimize_parameters(unsigned resolution, unsigned threads) {
  if (resolution < 1)
    throw std::invalid_argument("optimize_parameters: resolution >= 1");
  size_t r = resolution + 1;

  Best best;
  const Rational ref_a = make_rational(5, 44), ref_d = make_rational(1, 1132);
  best.consider(objective(ref_a, ref_d), ref_a, ref_d);

  Rational lo_a(0), hi_a(1);
  Rational lo_d(0), hi_d = make_rational(1, 3);
  for (int round = 0; round < 4; ++round) {
    Rational wa = (hi_a - lo_a) / make_rational(static_cast<long long>(r + 1));
    Rational wd = (hi_d - lo_d) / make_rational(static_cast<long long>(r + 1));
    auto worker = [&](size_t begin, size_t end) {
      Best local;
      for (size_t i = begin; i < end; ++i) {
        Rational a = lo_a + wa * make_rational(static_cast<long long>(i + 1));
        for (size_t k = 0; k < r; ++k) {
          Rational d = lo_d + wd * make_rational(static_cast<long long>(k + 1));
          local.consider(objective(a, d), a, d);
        }
      }
      return local;
    };
    for (const Best& b : parallel_blocks<Best>(r, threads, worker))
      best.merge(b);
    // shrink the box two lattice cells around the incumbent
    lo_a = std::max(Rational(0), Rational(best.a - 2 * wa));
    hi_a = std::min(Rational(1), Rational(best.a + 2 * wa));
    lo_d = std::max(Rational(0), Rational(best.d - 2 * wd));
    hi_d = std::min(make_rational(1, 3), Rational(best.d + 2 * wd));
  }

  OptimizeResult out;
  out.a = best.a;
  out.d = best.d;
  out.min_coefficient = best.value;
  out.resolution = resolution;
  out.reference_point_certified =
      objective(ref_a, ref_d) >= make_rational(1000, 11981);
  internal_check(out.min_coefficient >= objective(ref_a, ref_d),
                 "optimizer must dominate the reference point");
  return out;
}

std::string optimize_result_json(const OptimizeResult& r) {
  nlohmann::ordered_json j;
  j["a"] = to_string(r.a);
  j["d"] = to_string(r.d);
  j["min_coefficient"] = to_string(r.min_coefficient);
  j["min_coefficient_value"] = to_double(r.min_coefficient);
  j["reference_point_certified"] = r.reference_point_certified;
  j["resolution"] = r.resolution;
  return j.dump(2);
}

EpsilonChain epsilon_chain() {
  EpsilonChain c;
  c.alpha = 1 - make_rational(1000, 11981);
  c.coefficient = improvement_coefficient(c.alpha);
  c.excess = c.coefficient - make_rational(13, 36);
  internal_check(c.excess == make_rational(19, 431316), "excess = 19/431316");
  internal_check(c.excess >= make_rational(1, 22702), "excess >= 1/22702");
  internal_check(c.excess > make_rational(1, 23000), "excess > 1/23000");
  return c;
}

}  // namespace cdl
