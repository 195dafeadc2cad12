#include "arrows/affine.hpp"

#include "arrows/arrow_ops.hpp"
#include "arrows/error.hpp"
#include "arrows/metric.hpp"
#include "arrows/vector_space.hpp"

namespace arrows {

ProjectionResult project_point(const Point& o, const Point& g, const Point& p) {
  if (o.dim() != g.dim() || o.dim() != p.dim()) {
    raise(ErrorCode::DimensionMismatch, "projection with mixed dimensions");
  }
  if (o == g) {
    raise(ErrorCode::DegenerateLine,
          "projection target line needs two distinct points");
  }
  const Arrow og(o, g);
  const Arrow op(o, p);
  const Rational t = pre_inner(og, op) / measure_sq(og);
  const Point foot = scalar_mul(t, og).head();
  return ProjectionResult{
      .foot = foot,
      .parameter = t,
      .residual_sq = measure_sq(Arrow(foot, p)),
  };
}

CauchySchwarz cauchy_schwarz(const Arrow& a, const Arrow& b) {
  const Rational lhs = pre_inner(a, b).squared();
  const Rational rhs = measure_sq(a) * measure_sq(b);
  return CauchySchwarz{.lhs = lhs, .rhs = rhs, .tight = lhs == rhs};
}

namespace {

void validate(const BarycenterSpec& spec, const Point& origin) {
  if (spec.points.empty()) {
    raise(ErrorCode::InvalidArgument, "barycenter of an empty family");
  }
  if (spec.points.size() != spec.weights.size()) {
    raise(ErrorCode::InvalidArgument,
          "barycenter family has " + std::to_string(spec.points.size()) +
              " points but " + std::to_string(spec.weights.size()) + " weights");
  }
  for (const Point& p : spec.points) {
    if (p.dim() != origin.dim()) {
      raise(ErrorCode::DimensionMismatch, "barycenter with mixed dimensions");
    }
  }
  Rational sum;
  for (const Rational& w : spec.weights) sum += w;
  if (sum != Rational(1)) {
    raise(ErrorCode::WeightSumNotOne,
          "barycentric weights sum to " + sum.to_string() + ", not 1");
  }
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.points.size(); ++j) {
      if (spec.points[i] == spec.points[j]) {
        raise(ErrorCode::DuplicatePoints,
              "barycenter family repeats the point " +
                  spec.points[i].to_string());
      }
    }
  }
}

}  // namespace

Point barycenter_by_displacement(const BarycenterSpec& spec,
                                 const Point& origin) {
  validate(spec, origin);
  std::vector<Rational> acc(origin.dim());
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    for (std::size_t k = 0; k < acc.size(); ++k) {
      acc[k] += spec.weights[i] * (spec.points[i][k] - origin[k]);
    }
  }
  return translate(origin, acc);
}

Point barycenter_by_chain(const BarycenterSpec& spec, const Point& origin) {
  validate(spec, origin);
  // Fold the weighted terms with class addition, each step anchored at the
  // running endpoint: after k steps the accumulator is the class of
  // origin -> R_k, and the next term is adjoined by a transport to R_k
  // followed by the (partial) arrow addition.
  Vector acc = to_vector(scalar_mul(spec.weights[0], Arrow(origin, spec.points[0])));
  for (std::size_t i = 1; i < spec.points.size(); ++i) {
    const Vector term =
        to_vector(scalar_mul(spec.weights[i], Arrow(origin, spec.points[i])));
    const Point anchor = translate(origin, acc.displacement());
    acc = vec_add_at(acc, term, anchor);
  }
  return translate(origin, acc.displacement());
}

Point barycenter(const BarycenterSpec& spec, const Point& origin) {
  const Point direct = barycenter_by_displacement(spec, origin);
  const Point chained = barycenter_by_chain(spec, origin);
  if (direct != chained) {
    raise(ErrorCode::InternalCheckFailed,
          "barycenter paths disagree: " + direct.to_string() + " vs " +
              chained.to_string());
  }
  return direct;
}

Point barycenter(const BarycenterSpec& spec) {
  if (spec.points.empty()) {
    raise(ErrorCode::InvalidArgument, "barycenter of an empty family");
  }
  return barycenter(spec, Point::zero(spec.points[0].dim()));
}

}  // namespace arrows
