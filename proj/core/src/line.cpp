#include "arrows/line.hpp"

#include "arrows/error.hpp"
#include "arrows/metric.hpp"

namespace arrows {

Line line_through(const Point& a, const Point& b) {
  if (a == b) {
    raise(ErrorCode::DegenerateLine,
          "no unique line through coincident points " + a.to_string());
  }
  return Line(Arrow(a, b));
}

Point point_at(const Line& l, const Rational& t) {
  return scalar_mul(t, l.generator()).head();
}

std::optional<Rational> contains(const Line& l, const Point& d) {
  if (l.dim() != d.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "line of dimension " + std::to_string(l.dim()) +
              " queried with a point of dimension " + std::to_string(d.dim()));
  }
  const Point& base = l.base();
  const std::vector<Rational> g = displacement(l.generator());
  // The generator is nondegenerate, so some coordinate moves; solve there and
  // cross-check everywhere.
  std::size_t pivot = 0;
  while (g[pivot].is_zero()) ++pivot;
  const Rational t = (d[pivot] - base[pivot]) / g[pivot];
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (base[i] + t * g[i] != d[i]) {
      return std::nullopt;
    }
  }
  return t;
}

bool between(const Point& a, const Point& b, const Point& c) {
  if (a.dim() != b.dim() || b.dim() != c.dim()) {
    raise(ErrorCode::DimensionMismatch, "betweenness of mixed-dimension points");
  }
  if (a == b || b == c || a == c) {
    raise(ErrorCode::DegenerateBetween,
          "betweenness needs three pairwise distinct points");
  }
  const Line l = line_through(a, c);
  if (!contains(l, b)) {
    raise(ErrorCode::NotCollinear,
          "no line through " + a.to_string() + ", " + b.to_string() + ", " +
              c.to_string());
  }
  // b strictly between a and c iff the arrows b->a and b->c point opposite
  // ways: negative product plus the exact squared identity (the latter is
  // automatic for distinct collinear points, but asserted rather than assumed).
  const Arrow ba(b, a);
  const Arrow bc(b, c);
  const Rational ip = pre_inner(ba, bc);
  return ip.sign() < 0 && ip.squared() == measure_sq(ba) * measure_sq(bc);
}

ParallelPair parallel_on_line(const Line& l, const Arrow& ab, const Point& p) {
  if (ab.is_degenerate()) {
    raise(ErrorCode::DegenerateArrow,
          "parallel copies need a nondegenerate arrow");
  }
  if (!contains(l, ab.tail()) || !contains(l, ab.head())) {
    raise(ErrorCode::NotOnLine, "arrow " + ab.to_string() + " is not on the line");
  }
  if (!contains(l, p)) {
    raise(ErrorCode::NotOnLine, "point " + p.to_string() + " is not on the line");
  }
  // Parameter of p along ab itself (ab spans the same line, so this exists).
  const Rational t = *contains(line_through(ab.tail(), ab.head()), p);
  return ParallelPair{
      .ahead = scalar_mul(t + 1, ab).head(),
      .behind = scalar_mul(t - 1, ab).head(),
  };
}

bool line_eq(const Line& l1, const Line& l2) {
  return contains(l1, l2.base()).has_value() &&
         contains(l1, l2.generator().head()).has_value() &&
         contains(l2, l1.base()).has_value() &&
         contains(l2, l1.generator().head()).has_value();
}

}  // namespace arrows
