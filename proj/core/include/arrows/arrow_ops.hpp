#pragma once

#include <string_view>

#include "arrows/arrow.hpp"
#include "arrows/metric.hpp"
#include "arrows/rational.hpp"

namespace arrows {

// Partial arrow addition: AB + BC = AC, defined only when the first head meets
// the second tail. Raising UndefinedAddition on a mismatch is required
// behavior, not a convenience — the partiality is the point, and several
// algebraic "non-theorems" below exist only because of it.
Arrow add_arrows(const Arrow& a, const Arrow& b);

// Scalar multiplication, constructively: (t)AB is the arrow from A to
// A + t*(B - A). (0)AB and every multiple of a degenerate arrow collapse to
// the degenerate AA. The result always shares the input's tail; in particular
// (-1)AB = (A, 2A - B) is NOT the reversed arrow BA.
Arrow scalar_mul(const Rational& t, const Arrow& a);

// How two arrows point relative to each other, decided exactly:
//   Same          <a,b> > 0 and <a,b>^2 = measure_sq(a) * measure_sq(b)
//   Opposite      <a,b> < 0 and the same squared identity
//   Perpendicular <a,b> = 0 (includes every pairing with a degenerate arrow
//                 under the shipped model, where such products vanish)
//   Oblique       anything else with both arrows nondegenerate
//   Degenerate    a degenerate arrow paired with a nonzero product — cannot
//                 happen under a lawful model, kept so the classification is
//                 total for broken/experimental models too
enum class DirectionClass { Same, Opposite, Perpendicular, Oblique, Degenerate };

std::string_view to_string(DirectionClass c);

DirectionClass direction_relation(const Arrow& a, const Arrow& b,
                                  const MetricModel& model = euclidean());

// (s)(a + b): the well-formed way to scale a sum — the inner addition sees the
// original meeting point. Propagates UndefinedAddition from the inner sum.
Arrow checked_mixed_sum(const Rational& s, const Arrow& a, const Arrow& b);

// (s)a + (s)b: the distributed form. Scaling moves both heads, so for s != 1
// the summands no longer meet (except degenerate setups and the s = 0 left
// collapse) and this raises UndefinedAddition. Exposed precisely so that
// failure is testable as a contract.
Arrow distributed_mixed_sum(const Rational& s, const Arrow& a, const Arrow& b);

}  // namespace arrows
