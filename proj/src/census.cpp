#include "cdl/census.hpp"

#include <json.hpp>

namespace cdl {

Rational improvement_coefficient(const Rational& alpha) {
  if (alpha < 0 || alpha > 1)
    throw std::invalid_argument("improvement_coefficient: alpha must be in [0,1]");
  return (Rational(2) - alpha) / Rational(3);
}

std::string census_report_json(const CensusReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["z"] = r.z;
  j["per_point_distinct"] = r.per_point_distinct;
  j["max_point_distinct"] = r.max_point_distinct;
  j["total_distinct"] = r.total_distinct;
  j["good_edges"] = r.good_edges;
  j["equilateral_triples"] = r.equilateral_triples;
  j["backend"] = r.backend;
  if (r.backend == "float") j["eps"] = r.eps;
  return j.dump(2);
}

}  // namespace cdl
