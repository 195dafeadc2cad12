#include "arrows/arrow.hpp"

#include <utility>

#include "arrows/error.hpp"

namespace arrows {

Arrow::Arrow(Point tail, Point head)
    : tail_(std::move(tail)), head_(std::move(head)) {
  if (tail_.dim() != head_.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "arrow endpoints have dimensions " + std::to_string(tail_.dim()) +
              " and " + std::to_string(head_.dim()));
  }
}

std::string Arrow::to_string() const {
  return tail_.to_string() + " -> " + head_.to_string();
}

bool operator==(const Arrow& lhs, const Arrow& rhs) {
  return lhs.tail_ == rhs.tail_ && lhs.head_ == rhs.head_;
}

bool arrow_eq(const Arrow& a, const Arrow& b) { return a == b; }

Arrow negate(const Arrow& a) { return Arrow(a.head(), a.tail()); }

std::vector<Rational> displacement(const Arrow& a) {
  std::vector<Rational> d = a.head().coords();
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] -= a.tail()[i];
  }
  return d;
}

Arrow anchored_at(const Point& tail, const std::vector<Rational>& d) {
  return Arrow(tail, translate(tail, d));
}

}  // namespace arrows
