#include <istream>
#include <json.hpp>

#include "cdl/instance.hpp"
#include "cdl/point_io.hpp"

namespace cdl {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

size_t circular_distance(size_t i, size_t j, size_t n) {
  if (i >= n || j >= n)
    throw std::out_of_range("circular_distance: index out of range");
  size_t fwd = (j + n - i) % n;
  size_t bwd = (i + n - j) % n;
  return std::min(fwd, bwd);
}

PointSetFile parse_point_set(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("point set: bad JSON: ") + e.what());
  }
  bool has_exact = doc.contains("points");
  bool has_float = doc.contains("points_float");
  if (has_exact == has_float)
    throw std::invalid_argument(
        "point set: exactly one of \"points\" / \"points_float\" required");
  PointSetFile out;
  if (has_exact) {
    std::vector<Point> pts;
    for (const auto& row : doc["points"]) {
      if (!row.is_array() || row.size() != 4)
        throw std::invalid_argument("point set: expected [xn,xd,yn,yd]");
      long long xn = row[0].get<long long>(), xd = row[1].get<long long>();
      long long yn = row[2].get<long long>(), yd = row[3].get<long long>();
      pts.push_back({make_rational(xn, xd), make_rational(yn, yd)});
    }
    out.points = std::move(pts);
  } else {
    std::vector<FloatPoint> pts;
    for (const auto& row : doc["points_float"]) {
      if (!row.is_array() || row.size() != 2)
        throw std::invalid_argument("point set: expected [x,y]");
      pts.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    out.points = std::move(pts);
  }
  return out;
}

PointSetFile read_point_set(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_point_set(text);
}

std::string write_point_set(const std::vector<Point>& pts) {
  ordered doc;
  auto rows = ordered::array();
  for (const auto& p : pts) {
    if (!fits_int64(p.x) || !fits_int64(p.y))
      throw std::invalid_argument(
          "point set: coordinate exceeds int64; not serializable");
    rows.push_back({p.x.get_num().get_si(), p.x.get_den().get_si(),
                    p.y.get_num().get_si(), p.y.get_den().get_si()});
  }
  doc["points"] = std::move(rows);
  return doc.dump();
}

std::string write_point_set(const std::vector<FloatPoint>& pts) {
  ordered doc;
  auto rows = ordered::array();
  for (const auto& p : pts) rows.push_back({p.x, p.y});
  doc["points_float"] = std::move(rows);
  return doc.dump();
}

}  // namespace cdl
