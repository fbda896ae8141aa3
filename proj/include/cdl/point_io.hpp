#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cdl/geometry.hpp"

namespace cdl {

// On-disk point-set document. Exactly one of the two forms:
//   {"points":       [[xnum, xden, ynum, yden], ...]}   exact backend
//   {"points_float": [[x, y], ...]}                     float backend
struct PointSetFile {
  std::variant<std::vector<Point>, std::vector<FloatPoint>> points;

  bool is_exact() const {
    return std::holds_alternative<std::vector<Point>>(points);
  }
};

PointSetFile read_point_set(std::istream& in);
PointSetFile parse_point_set(const std::string& text);

// Exact coordinates must fit int64 numerator/denominator; throws otherwise.
std::string write_point_set(const std::vector<Point>& pts);
std::string write_point_set(const std::vector<FloatPoint>& pts);

}  // namespace cdl
