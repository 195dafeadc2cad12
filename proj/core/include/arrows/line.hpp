#pragma once

#include <optional>

#include "arrows/arrow.hpp"
#include "arrows/arrow_ops.hpp"
#include "arrows/point.hpp"
#include "arrows/rational.hpp"

namespace arrows {

// The line through two distinct points, represented by its generating arrow:
// the member at parameter t is the head of (t)gen, so the base point is t = 0
// and the generator head is t = 1. Construct via line_through.
class Line {
 public:
  const Point& base() const { return gen_.tail(); }
  const Arrow& generator() const { return gen_; }
  std::size_t dim() const { return gen_.dim(); }

 private:
  friend Line line_through(const Point& a, const Point& b);
  explicit Line(Arrow gen) : gen_(std::move(gen)) {}

  Arrow gen_;  // nondegenerate, tail is the base point
};

// Throws DegenerateLine when a = b (no direction to generate from).
Line line_through(const Point& a, const Point& b);

// The member of l at rational parameter t.
Point point_at(const Line& l, const Rational& t);

// Membership with parameter extraction: the rational t with d = point_at(l, t)
// if one exists, nullopt otherwise. Solved componentwise and cross-checked on
// every coordinate; exact.
std::optional<Rational> contains(const Line& l, const Point& d);

// Strict betweenness: is b strictly between a and c? Decided by the sign of
// <ba, bc> together with the squared-collinearity identity. Throws
// DegenerateBetween if any two of the points coincide, NotCollinear if the
// three points share no line.
bool between(const Point& a, const Point& b, const Point& c);

// The two on-line parallel copies of an on-line arrow ab through an on-line
// point p: `ahead` is the unique on-line K with p->K equivalent to ab, and
// `behind` the unique on-line K' with K'->p equivalent to ab. If p sits at
// parameter t of ab (p = A + t*(B-A)), then ahead is at parameter t+1 and
// behind at t-1.
struct ParallelPair {
  Point ahead;   // head of the copy anchored with tail p
  Point behind;  // tail of the copy anchored with head p
};

// Throws DegenerateArrow if ab is degenerate, NotOnLine if ab's endpoints or p
// are not members of l.
ParallelPair parallel_on_line(const Line& l, const Arrow& ab, const Point& p);

// Same membership set? True iff each line's base and generator head lie on the
// other line.
bool line_eq(const Line& l1, const Line& l2);

}  // namespace arrows
