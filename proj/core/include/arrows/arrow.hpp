#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrows/point.hpp"

namespace arrows {

// An ordered pair of points (tail, head) in the same dimension. Arrows are the
// pre-vector objects: their addition is partial (head must meet tail) and two
// arrows with equal displacement but different tails are NOT equal — equality
// is endpointwise. Degenerate arrows (tail = head) are allowed everywhere and
// play the role of local zeros.
class Arrow {
 public:
  Arrow(Point tail, Point head);  // throws DimensionMismatch

  const Point& tail() const { return tail_; }
  const Point& head() const { return head_; }
  std::size_t dim() const { return tail_.dim(); }
  bool is_degenerate() const { return tail_ == head_; }

  std::string to_string() const;  // "(0, 0) -> (1, 1)"

  friend bool operator==(const Arrow& lhs, const Arrow& rhs);
  friend bool operator!=(const Arrow& lhs, const Arrow& rhs) { return !(lhs == rhs); }

 private:
  Point tail_;
  Point head_;
};

// Named form of operator== (tails equal and heads equal; throws on dimension
// mismatch).
bool arrow_eq(const Arrow& a, const Arrow& b);

// The reversed arrow BA. Note this is an involution on endpoints, not the
// scalar multiple (-1)AB — those two differ whenever the arrow is
// nondegenerate, and keeping them distinct is load-bearing for the algebra.
Arrow negate(const Arrow& a);

// head - tail, one rational per coordinate.
std::vector<Rational> displacement(const Arrow& a);

// The arrow from `tail` to `tail + d`.
Arrow anchored_at(const Point& tail, const std::vector<Rational>& d);

}  // namespace arrows
