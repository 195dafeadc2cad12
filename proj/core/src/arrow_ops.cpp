#include "arrows/arrow_ops.hpp"

#include "arrows/error.hpp"

namespace arrows {

Arrow add_arrows(const Arrow& a, const Arrow& b) {
  if (a.dim() != b.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "adding arrows of dimensions " + std::to_string(a.dim()) + " and " +
              std::to_string(b.dim()));
  }
  if (a.head() != b.tail()) {
    raise(ErrorCode::UndefinedAddition,
          "undefined addition: head " + a.head().to_string() + " != tail " +
              b.tail().to_string());
  }
  return Arrow(a.tail(), b.head());
}

Arrow scalar_mul(const Rational& t, const Arrow& a) {
  if (t.is_zero() || a.is_degenerate()) {
    return Arrow(a.tail(), a.tail());
  }
  std::vector<Rational> d = displacement(a);
  for (Rational& c : d) c *= t;
  return anchored_at(a.tail(), d);
}

std::string_view to_string(DirectionClass c) {
  switch (c) {
    case DirectionClass::Same: return "Same";
    case DirectionClass::Opposite: return "Opposite";
    case DirectionClass::Perpendicular: return "Perpendicular";
    case DirectionClass::Oblique: return "Oblique";
    case DirectionClass::Degenerate: return "Degenerate";
  }
  return "?";
}

DirectionClass direction_relation(const Arrow& a, const Arrow& b,
                                  const MetricModel& model) {
  const Rational ip = model.pre_inner(a, b);
  if (ip.is_zero()) {
    return DirectionClass::Perpendicular;
  }
  if (a.is_degenerate() || b.is_degenerate()) {
    return DirectionClass::Degenerate;
  }
  if (ip.squared() == model.measure_sq(a) * model.measure_sq(b)) {
    return ip.sign() > 0 ? DirectionClass::Same : DirectionClass::Opposite;
  }
  return DirectionClass::Oblique;
}

Arrow checked_mixed_sum(const Rational& s, const Arrow& a, const Arrow& b) {
  return scalar_mul(s, add_arrows(a, b));
}

Arrow distributed_mixed_sum(const Rational& s, const Arrow& a, const Arrow& b) {
  return add_arrows(scalar_mul(s, a), scalar_mul(s, b));
}

}  // namespace arrows
