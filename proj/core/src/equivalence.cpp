#include "arrows/equivalence.hpp"

#include "arrows/error.hpp"

namespace arrows {

bool related(const Arrow& a, const Arrow& b, const MetricModel& model) {
  if (a.is_degenerate() && b.is_degenerate()) {
    return true;
  }
  const Rational ma = model.measure_sq(a);
  return ma == model.measure_sq(b) && model.pre_inner(a, b) == ma;
}

TransportResult parallel_transport(const Arrow& a, const Point& p) {
  if (a.dim() != p.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "transporting an arrow of dimension " + std::to_string(a.dim()) +
              " to a point of dimension " + std::to_string(p.dim()));
  }
  const std::vector<Rational> d = displacement(a);
  std::vector<Rational> back = d;
  for (Rational& c : back) c = -c;
  return TransportResult{
      .tail_anchored = anchored_at(p, d),
      .head_anchored = Arrow(translate(p, back), p),
  };
}

bool check_axiom4(const Arrow& a, const Arrow& b, const Arrow& c,
                  const Arrow& d, const MetricModel& model) {
  if (!related(a, b, model) || !related(c, d, model)) {
    raise(ErrorCode::PreconditionViolated,
          "transport invariance is only defined for related pairs");
  }
  return model.pre_inner(a, c) == model.pre_inner(b, d);
}

Arrow canonical_rep(const Arrow& a) {
  return anchored_at(Point::zero(a.dim()), displacement(a));
}

}  // namespace arrows
