#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrows/arrow.hpp"
#include "arrows/metric.hpp"
#include "arrows/point.hpp"
#include "arrows/rational.hpp"

namespace arrows {

// A vector: an equivalence class of arrows, stored as the canonical
// displacement (the head of the unique class member whose tail is the zero
// point). Class equality is displacement equality.
class Vector {
 public:
  explicit Vector(std::vector<Rational> displacement);  // throws on empty

  static Vector zero(std::size_t dim);

  std::size_t dim() const { return displacement_.size(); }
  const std::vector<Rational>& displacement() const { return displacement_; }
  bool is_zero() const;

  std::string to_string() const;  // "(1, 2)"

  friend bool operator==(const Vector& lhs, const Vector& rhs);
  friend bool operator!=(const Vector& lhs, const Vector& rhs) { return !(lhs == rhs); }

 private:
  std::vector<Rational> displacement_;
};

// The class of an arrow.
Vector to_vector(const Arrow& a);

// The class member anchored at the zero point (tail 0, head = displacement).
Arrow canonical_arrow(const Vector& u);

// Class addition the way the quotient defines it: pick any point p, take the
// member of u with head p and the member of v with tail p, chain them with
// arrow addition, and classify the result. The choice of p provably does not
// matter; that independence is property-tested, not assumed. This is the
// definitional route — it genuinely goes through parallel transport and the
// partial arrow addition.
Vector vec_add_at(const Vector& u, const Vector& v, const Point& p);

// Class addition, fast path: componentwise displacement sum (equivalently
// vec_add_at at the zero point). Tests pin that both paths agree everywhere.
Vector vec_add(const Vector& u, const Vector& v);

// Scalar action on classes, via the representative: [(t) rep].
Vector vec_scalar_mul(const Rational& t, const Vector& u);

// The induced inner product: the pre-inner product of any representatives;
// well-defined by transport invariance. Evaluated on canonical representatives.
Rational vec_inner(const Vector& u, const Vector& v,
                   const MetricModel& model = euclidean());

// Additive inverse: the class of the reversed representative.
Vector vec_neg(const Vector& u);

}  // namespace arrows
