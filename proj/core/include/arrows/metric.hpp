#pragma once

#include <string>
#include <vector>

#include "arrows/arrow.hpp"
#include "arrows/rational.hpp"

namespace arrows {

// A pre-inner product on arrows: an exact, symmetric, positive-definite form
// that is additive over head-to-tail decompositions and homogeneous under
// arrow scaling. Those laws are NOT assumed by this interface — run the
// harness axiom suite against any new model before trusting it; the kernel's
// theorems only hold for models that pass.
class MetricModel {
 public:
  virtual ~MetricModel() = default;

  // Exact pre-inner product of two arrows of equal dimension
  // (throws DimensionMismatch otherwise).
  virtual Rational pre_inner(const Arrow& a, const Arrow& b) const = 0;

  virtual std::string name() const = 0;

  // Squared measure (squared length). Measures are kept squared everywhere so
  // every predicate downstream stays a polynomial identity over Q.
  Rational measure_sq(const Arrow& a) const { return pre_inner(a, a); }
};

// The shipped model: the Euclidean dot product of displacements on Q^n.
class EuclideanMetric final : public MetricModel {
 public:
  Rational pre_inner(const Arrow& a, const Arrow& b) const override;
  std::string name() const override { return "euclidean"; }
};

// The shared shipped-model instance. All convenience overloads that omit a
// model parameter use this.
const EuclideanMetric& euclidean();

// An alternative lawful model: positive diagonal weights, one per coordinate.
// Exists to demonstrate that the kernel's laws are model-checked rather than
// hardwired to the dot product.
class DiagonalMetric final : public MetricModel {
 public:
  explicit DiagonalMetric(std::vector<Rational> weights);  // all weights > 0

  Rational pre_inner(const Arrow& a, const Arrow& b) const override;
  std::string name() const override { return "diagonal"; }

 private:
  std::vector<Rational> weights_;
};

// A deliberately broken wrapper that flips the sign of another model's form.
// It violates positive definiteness on every nondegenerate arrow; its whole
// purpose is to prove the harness notices (mutation sensitivity).
class NegatedMetric final : public MetricModel {
 public:
  explicit NegatedMetric(const MetricModel& inner) : inner_(inner) {}

  Rational pre_inner(const Arrow& a, const Arrow& b) const override {
    return -inner_.pre_inner(a, b);
  }
  std::string name() const override { return "negated(" + inner_.name() + ")"; }

 private:
  const MetricModel& inner_;
};

// Shipped-model shortcuts.
Rational pre_inner(const Arrow& a, const Arrow& b);
Rational measure_sq(const Arrow& a);

}  // namespace arrows
