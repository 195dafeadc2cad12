#include "arrows/point.hpp"

#include <sstream>
#include <utility>

#include "arrows/error.hpp"

namespace arrows {

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    raise(ErrorCode::InvalidArgument, "point needs at least one coordinate");
  }
}

Point Point::zero(std::size_t dim) {
  return Point(std::vector<Rational>(dim));
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) os << ", ";
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

bool operator==(const Point& lhs, const Point& rhs) {
  if (lhs.dim() != rhs.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "comparing points of dimension " + std::to_string(lhs.dim()) +
              " and " + std::to_string(rhs.dim()));
  }
  return lhs.coords_ == rhs.coords_;
}

bool point_eq(const Point& a, const Point& b) { return a == b; }

Point translate(const Point& p, const std::vector<Rational>& displacement) {
  if (p.dim() != displacement.size()) {
    raise(ErrorCode::DimensionMismatch,
          "translating a point of dimension " + std::to_string(p.dim()) +
              " by a displacement of dimension " +
              std::to_string(displacement.size()));
  }
  std::vector<Rational> coords = p.coords();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] += displacement[i];
  }
  return Point(std::move(coords));
}

}  // namespace arrows
