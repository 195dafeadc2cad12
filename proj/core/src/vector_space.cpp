#include "arrows/vector_space.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "arrows/arrow_ops.hpp"
#include "arrows/equivalence.hpp"
#include "arrows/error.hpp"

namespace arrows {

Vector::Vector(std::vector<Rational> displacement)
    : displacement_(std::move(displacement)) {
  if (displacement_.empty()) {
    raise(ErrorCode::InvalidArgument, "vector needs at least one coordinate");
  }
}

Vector Vector::zero(std::size_t dim) {
  return Vector(std::vector<Rational>(dim));
}

bool Vector::is_zero() const {
  return std::all_of(displacement_.begin(), displacement_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < displacement_.size(); ++i) {
    if (i > 0) os << ", ";
    os << displacement_[i];
  }
  os << ')';
  return os.str();
}

bool operator==(const Vector& lhs, const Vector& rhs) {
  if (lhs.dim() != rhs.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "comparing vectors of dimension " + std::to_string(lhs.dim()) +
              " and " + std::to_string(rhs.dim()));
  }
  return lhs.displacement_ == rhs.displacement_;
}

Vector to_vector(const Arrow& a) { return Vector(displacement(a)); }

Arrow canonical_arrow(const Vector& u) {
  return anchored_at(Point::zero(u.dim()), u.displacement());
}

Vector vec_add_at(const Vector& u, const Vector& v, const Point& p) {
  if (u.dim() != v.dim() || u.dim() != p.dim()) {
    raise(ErrorCode::DimensionMismatch, "class addition with mixed dimensions");
  }
  // Member of u ending at p, member of v starting at p; their chain sum
  // represents u + v regardless of which p was chosen.
  const Arrow into_p = parallel_transport(canonical_arrow(u), p).head_anchored;
  const Arrow out_of_p = parallel_transport(canonical_arrow(v), p).tail_anchored;
  return to_vector(add_arrows(into_p, out_of_p));
}

Vector vec_add(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "adding vectors of dimension " + std::to_string(u.dim()) + " and " +
              std::to_string(v.dim()));
  }
  std::vector<Rational> sum = u.displacement();
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] += v.displacement()[i];
  }
  return Vector(std::move(sum));
}

Vector vec_scalar_mul(const Rational& t, const Vector& u) {
  return to_vector(scalar_mul(t, canonical_arrow(u)));
}

Rational vec_inner(const Vector& u, const Vector& v, const MetricModel& model) {
  return model.pre_inner(canonical_arrow(u), canonical_arrow(v));
}

Vector vec_neg(const Vector& u) {
  return to_vector(negate(canonical_arrow(u)));
}

}  // namespace arrows
