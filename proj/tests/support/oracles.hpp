#pragma once

// Naive reference implementations used to cross-check library results.
// Everything here works on raw coordinate vectors and deliberately avoids the
// geometry operations under test, so a bug cannot hide in both sides.

#include <cstddef>
#include <optional>
#include <vector>

#include "arrows/rational.hpp"

namespace oracle {

using arrows::Rational;
using Coords = std::vector<Rational>;

// head - tail, componentwise.
inline Coords diff(const Coords& head, const Coords& tail) {
  Coords d(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) d[i] = head[i] - tail[i];
  return d;
}

inline Rational dot(const Coords& a, const Coords& b) {
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// t*x + y, componentwise.
inline Coords axpy(const Rational& t, const Coords& x, const Coords& y) {
  Coords r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = t * x[i] + y[i];
  return r;
}

inline Coords weighted_sum(const std::vector<Rational>& weights,
                           const std::vector<Coords>& points) {
  Coords acc(points.front().size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t i = 0; i < acc.size(); ++i) {
      acc[i] += weights[k] * points[k][i];
    }
  }
  return acc;
}

// The t with base + t*dir == target, solved one coordinate at a time and
// cross-checked against all of them; nullopt when no single t works.
inline std::optional<Rational> solve_parameter(const Coords& base,
                                               const Coords& dir,
                                               const Coords& target) {
  std::optional<Rational> t;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (dir[i].is_zero()) {
      if (target[i] != base[i]) return std::nullopt;
      continue;
    }
    const Rational ti = (target[i] - base[i]) / dir[i];
    if (!t) {
      t = ti;
    } else if (*t != ti) {
      return std::nullopt;
    }
  }
  return t;
}

}  // namespace oracle
