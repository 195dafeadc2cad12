#pragma once

#include <vector>

#include "arrows/arrow.hpp"
#include "arrows/point.hpp"
#include "arrows/rational.hpp"

namespace arrows {

// Orthogonal projection of p onto the line through o and g.
struct ProjectionResult {
  Point foot;           // W, the on-line point nearest p
  Rational parameter;   // t with W = o + t*(g - o)
  Rational residual_sq; // squared distance from W to p; 0 iff p is on the line
};

// t = <og, op> / <og, og>; exact. Total over p: a point already on the line
// projects to itself with residual 0. Throws DegenerateLine when o = g,
// DimensionMismatch on mixed dimensions. The defining property — the residual
// arrow is perpendicular to the line — holds exactly and is property-tested.
ProjectionResult project_point(const Point& o, const Point& g, const Point& p);

// The two sides of the Cauchy-Schwarz inequality for a pair of arrows, kept
// squared so both sides are rational: lhs = <a,b>^2, rhs = |a|^2 * |b|^2.
// lhs <= rhs always; tight (equality) exactly when one displacement is a
// rational multiple of the other.
struct CauchySchwarz {
  Rational lhs;
  Rational rhs;
  bool tight;
};

CauchySchwarz cauchy_schwarz(const Arrow& a, const Arrow& b);

// A weighted family of pairwise distinct points whose weights sum to exactly
// 1. Weights may be negative (affine, not necessarily convex, combinations).
struct BarycenterSpec {
  std::vector<Point> points;
  std::vector<Rational> weights;
};

// The barycenter: the unique point M with (O -> M) = sum of weights[i] * (O -> P_i),
// independent of the origin O. Computed twice internally — once as a direct
// weighted displacement sum, once as the chained class addition the definition
// prescribes — and the two results are cross-checked before returning.
// Throws WeightSumNotOne, DuplicatePoints, DimensionMismatch, InvalidArgument
// (empty family or mismatched list lengths).
Point barycenter(const BarycenterSpec& spec, const Point& origin);

// Same, with the origin defaulted to the zero point of the family's dimension.
Point barycenter(const BarycenterSpec& spec);

// The two computation paths, individually. Exposed so tests (and anyone
// auditing the cross-check) can drive them separately; each validates its
// input BarycenterSpec first.
Point barycenter_by_displacement(const BarycenterSpec& spec, const Point& origin);
Point barycenter_by_chain(const BarycenterSpec& spec, const Point& origin);

}  // namespace arrows
