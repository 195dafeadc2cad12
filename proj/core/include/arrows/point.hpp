#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrows/rational.hpp"

namespace arrows {

// A point of Q^n, n >= 1. Immutable. Points carry their dimension; mixing
// dimensions is an error, never a silent false, so comparison across
// dimensions throws DimensionMismatch.
class Point {
 public:
  explicit Point(std::vector<Rational> coords);  // throws InvalidArgument on empty

  static Point zero(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  std::string to_string() const;  // "(1/2, -3)"

  friend bool operator==(const Point& lhs, const Point& rhs);
  friend bool operator!=(const Point& lhs, const Point& rhs) { return !(lhs == rhs); }

 private:
  std::vector<Rational> coords_;
};

// Named form of operator==; same contract (throws DimensionMismatch when the
// dimensions differ, true iff every coordinate is equal).
bool point_eq(const Point& a, const Point& b);

// p shifted by a displacement (one rational per coordinate).
Point translate(const Point& p, const std::vector<Rational>& displacement);

}  // namespace arrows
