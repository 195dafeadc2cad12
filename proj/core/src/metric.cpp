#include "arrows/metric.hpp"

#include <utility>

#include "arrows/error.hpp"

namespace arrows {

namespace {

void require_same_dim(const Arrow& a, const Arrow& b) {
  if (a.dim() != b.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "pre-inner product of arrows with dimensions " +
              std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

}  // namespace

Rational EuclideanMetric::pre_inner(const Arrow& a, const Arrow& b) const {
  require_same_dim(a, b);
  Rational sum;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    sum += (a.head()[i] - a.tail()[i]) * (b.head()[i] - b.tail()[i]);
  }
  return sum;
}

const EuclideanMetric& euclidean() {
  static const EuclideanMetric model;
  return model;
}

DiagonalMetric::DiagonalMetric(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    raise(ErrorCode::InvalidArgument, "diagonal metric needs weights");
  }
  for (const Rational& w : weights_) {
    if (w.sign() <= 0) {
      raise(ErrorCode::InvalidArgument,
            "diagonal metric weights must be positive, got " + w.to_string());
    }
  }
}

Rational DiagonalMetric::pre_inner(const Arrow& a, const Arrow& b) const {
  require_same_dim(a, b);
  if (a.dim() != weights_.size()) {
    raise(ErrorCode::DimensionMismatch,
          "diagonal metric with " + std::to_string(weights_.size()) +
              " weights applied to dimension " + std::to_string(a.dim()));
  }
  Rational sum;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    sum += weights_[i] * (a.head()[i] - a.tail()[i]) * (b.head()[i] - b.tail()[i]);
  }
  return sum;
}

Rational pre_inner(const Arrow& a, const Arrow& b) {
  return euclidean().pre_inner(a, b);
}

Rational measure_sq(const Arrow& a) { return euclidean().measure_sq(a); }

}  // namespace arrows
