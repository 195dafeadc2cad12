#pragma once

#include "arrows/arrow.hpp"
#include "arrows/metric.hpp"

namespace arrows {

// The equivalence relation that quotients arrows into vectors: two arrows are
// related iff both are degenerate, or they have equal squared measure and
// their pre-inner product equals that common squared measure (same length,
// same direction — the normalized product is +1, stated square-root-free).
bool related(const Arrow& a, const Arrow& b,
             const MetricModel& model = euclidean());

// Both parallel copies of an arrow at a prescribed point: the unique arrow in
// a's class with tail p, and the unique one with head p. A degenerate input
// collapses to (pp, pp), the zero class anchored at p.
struct TransportResult {
  Arrow tail_anchored;  // p -> K,  related to the source
  Arrow head_anchored;  // K' -> p, related to the source
};

TransportResult parallel_transport(const Arrow& a, const Point& p);

// The transport-invariance identity behind the quotient's inner product: given
// related(a, b) and related(c, d), is <a, c> = <b, d>? Throws
// PreconditionViolated when either pair is unrelated — the identity means
// nothing there. Under a lawful model this always returns true; it is a
// checkable claim, not an assumption, which is why it is exposed.
bool check_axiom4(const Arrow& a, const Arrow& b, const Arrow& c,
                  const Arrow& d, const MetricModel& model = euclidean());

// The class representative anchored at the zero point: canonical_rep(AB) is
// the arrow 0 -> (B - A). Two arrows are related under the shipped model iff
// their canonical representatives are equal.
Arrow canonical_rep(const Arrow& a);

}  // namespace arrows
