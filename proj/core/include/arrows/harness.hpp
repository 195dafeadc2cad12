#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arrows/metric.hpp"
#include "arrows/rational.hpp"

namespace arrows::harness {

// Knobs for one randomized verification run. Identical configs produce
// byte-identical reports — determinism is a hard contract, relied on by the
// golden CLI tests.
struct TrialConfig {
  std::uint64_t trials = 1000;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::int64_t coord_bound = 10;  // numerators drawn from [-coord_bound, coord_bound]
  std::int64_t denom_bound = 6;   // denominators drawn from [1, denom_bound]
};

// Throws InvalidArgument on dim = 0 or bounds < 1. trials = 0 is legal and
// yields an empty report.
void validate(const TrialConfig& cfg);

// Small deterministic generator (splitmix64), hand-rolled so the stream is
// identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64();
  std::int64_t next_int(std::int64_t lo, std::int64_t hi);  // inclusive
  Rational next_rational(std::int64_t coord_bound, std::int64_t denom_bound);

 private:
  std::uint64_t state_;
};

// Every trial gets its own substream keyed by (seed, check, trial index), so
// trials are schedulable in any order without changing what they see.
std::uint64_t substream_seed(std::uint64_t seed, std::string_view check_name,
                             std::uint64_t trial);

struct Failure {
  std::uint64_t trial;
  std::string witness;  // minimized counterexample, serialized
};

struct CheckResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> stored;  // first few failures, minimized, by trial index
};

struct Report {
  std::vector<CheckResult> checks;  // sorted by check name
  double wall_seconds = 0.0;        // informational; not serialized

  bool all_passed() const;

  // The documented text format, one line per check:
  //   CHECK <name> trials=<n> failures=<k>
  // followed by two-space-indented counterexample lines
  //   trial <i>: <witness>
  // and, when more failures occurred than are stored, an elision line
  //   ... <m> more failures not shown
  // Deterministic for a given config; wall time is deliberately excluded.
  std::string to_text() const;
};

// The check names of each suite, sorted — the same lists the README documents.
std::vector<std::string> axiom_check_names();
std::vector<std::string> theorem_check_names();

// Randomized verification of the pre-inner-product laws themselves (the five
// axiom-level checks plus transport invariance and parallel-copy
// existence/uniqueness) against an arbitrary model. The shipped Euclidean
// model passes everything; a broken model is expected to light up here.
Report run_axiom_suite(const TrialConfig& cfg,
                       const MetricModel& model = euclidean());

// Randomized verification of every derived law the library claims (arrow
// algebra, lines, the equivalence relation, the quotient vector space, and the
// affine applications), under the shipped model.
Report run_theorem_suite(const TrialConfig& cfg);

}  // namespace arrows::harness
