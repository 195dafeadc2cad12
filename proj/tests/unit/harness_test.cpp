#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "arrows/error.hpp"
#include "arrows/harness.hpp"
#include "arrows/metric.hpp"
#include "support/builders.hpp"

using arrows::ErrorCode;
using builders::thrown_code;
namespace harness = arrows::harness;

namespace {

harness::TrialConfig small_config() {
  harness::TrialConfig cfg;
  cfg.trials = 50;
  cfg.dim = 2;
  cfg.seed = 11;
  return cfg;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("the generator is splitmix64, bit for bit") {
  // Reference values computed with an independent implementation.
  harness::Rng rng(42);
  CHECK(rng.next_u64() == 13679457532755275413ull);
  CHECK(rng.next_u64() == 2949826092126892291ull);
  CHECK(rng.next_u64() == 5139283748462763858ull);
  CHECK(rng.next_u64() == 6349198060258255764ull);
  harness::Rng zero(0);
  CHECK(zero.next_u64() == 16294208416658607535ull);
}

TEST_CASE("integer draws are inclusive and in range") {
  harness::Rng rng(7);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 500; ++i) {
    const std::int64_t v = rng.next_int(-2, 2);
    CHECK(v >= -2);
    CHECK(v <= 2);
    seen.insert(v);
  }
  CHECK(seen == std::set<std::int64_t>{-2, -1, 0, 1, 2});
}

TEST_CASE("rational draws respect the bounds and are canonical") {
  harness::Rng rng(19);
  for (int i = 0; i < 300; ++i) {
    const arrows::Rational q = rng.next_rational(10, 6);
    CHECK(q.abs() <= arrows::Rational(10));
    CHECK(q.denominator() >= 1);
    CHECK(q.denominator() <= 6);
  }
}

TEST_CASE("substreams decorrelate checks and trials") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    seeds.insert(harness::substream_seed(3, "alpha", trial));
    seeds.insert(harness::substream_seed(3, "beta", trial));
  }
  CHECK(seeds.size() == 100);  // no collisions among this small family
  CHECK(harness::substream_seed(3, "alpha", 0) !=
        harness::substream_seed(4, "alpha", 0));
}

TEST_CASE("config validation") {
  harness::TrialConfig cfg;
  cfg.dim = 0;
  CHECK(thrown_code([&] { harness::validate(cfg); }) ==
        ErrorCode::InvalidArgument);
  cfg = harness::TrialConfig{};
  cfg.coord_bound = 0;
  CHECK(thrown_code([&] { harness::validate(cfg); }) ==
        ErrorCode::InvalidArgument);
  cfg = harness::TrialConfig{};
  cfg.denom_bound = 0;
  CHECK(thrown_code([&] { harness::validate(cfg); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("the advertised check lists are frozen") {
  const std::vector<std::string> axioms = {
      "axiom1_addition_linearity",
      "axiom1_negation_rule",
      "axiom1_positive_definiteness",
      "axiom1_symmetry",
      "axiom2_scalar_linearity",
      "axiom4_transport_invariance",
      "axiom5_parallel_arrow_existence_uniqueness",
  };
  CHECK(harness::axiom_check_names() == axioms);

  const std::vector<std::string> theorems = {
      "arrow_add_associativity",
      "arrow_add_identities",
      "arrow_add_inverse",
      "arrow_add_noncommutativity",
      "arrow_measure_scaling",
      "arrow_scalar_associativity",
      "arrow_scalar_injectivity",
      "arrow_triangle_closure",
      "barycenter_origin_independence",
      "cauchy_schwarz_tightness",
      "line_betweenness_trichotomy",
      "line_measure_split",
      "line_membership_characterization",
      "line_parallel_uniqueness",
      "line_pm_one_law",
      "line_sign_parameter_agreement",
      "projection_optimality",
      "projection_uniqueness",
      "rel_composite_relatedness",
      "rel_degeneracy_propagation",
      "rel_equivalence_laws",
      "rel_scaling_compatibility",
      "rel_transport_uniqueness",
      "vec_add_associativity",
      "vec_add_at_point_independence",
      "vec_add_commutativity",
      "vec_add_identity",
      "vec_add_inverse",
      "vec_closure",
      "vec_inner_product_laws",
      "vec_scalar_associativity",
      "vec_scalar_distributes_over_scalar_addition",
      "vec_scalar_distributes_over_vector_addition",
      "vec_unit_law",
  };
  CHECK(harness::theorem_check_names() == theorems);
}

TEST_CASE("suites pass under the shipped model and report every check") {
  const harness::TrialConfig cfg = small_config();
  const harness::Report axioms = harness::run_axiom_suite(cfg);
  CHECK(axioms.all_passed());
  CHECK(axioms.checks.size() == harness::axiom_check_names().size());
  CHECK(std::is_sorted(axioms.checks.begin(), axioms.checks.end(),
                       [](const auto& a, const auto& b) {
                         return a.name < b.name;
                       }));
  for (const auto& c : axioms.checks) {
    CHECK(c.trials == cfg.trials);
    CHECK(c.failure_count == 0);
    CHECK(c.stored.empty());
  }

  const harness::Report theorems = harness::run_theorem_suite(cfg);
  CHECK(theorems.all_passed());
  CHECK(theorems.checks.size() == harness::theorem_check_names().size());
}

TEST_CASE("the axiom suite passes under the diagonal model too") {
  const arrows::DiagonalMetric diag({arrows::Rational(2),
                                     arrows::Rational(1, 3)});
  const harness::Report report = harness::run_axiom_suite(small_config(), diag);
  CHECK(report.all_passed());
}

TEST_CASE("reports are deterministic, failures included") {
  harness::TrialConfig cfg = small_config();
  const arrows::NegatedMetric bad(arrows::euclidean());
  const harness::Report r1 = harness::run_axiom_suite(cfg, bad);
  const harness::Report r2 = harness::run_axiom_suite(cfg, bad);
  CHECK(r1.to_text() == r2.to_text());
  CHECK_FALSE(r1.all_passed());

  cfg.seed = 12;  // a different seed draws different witnesses
  const harness::Report r3 = harness::run_axiom_suite(cfg, bad);
  CHECK(r3.to_text() != r1.to_text());
}

TEST_CASE("a sign-flipped model fails positive definiteness") {
  harness::TrialConfig cfg = small_config();
  cfg.trials = 1000;
  const arrows::NegatedMetric bad(arrows::euclidean());
  const harness::Report report = harness::run_axiom_suite(cfg, bad);
  const auto it = std::find_if(
      report.checks.begin(), report.checks.end(), [](const auto& c) {
        return c.name == "axiom1_positive_definiteness";
      });
  REQUIRE(it != report.checks.end());
  CHECK(it->failure_count >= 1);
  CHECK_FALSE(it->stored.empty());
  CHECK(it->stored.size() <= 5);
}

TEST_CASE("report text format") {
  harness::TrialConfig cfg = small_config();
  cfg.trials = 400;
  const arrows::NegatedMetric bad(arrows::euclidean());
  const std::string text = harness::run_axiom_suite(cfg, bad).to_text();

  // Every check line follows the documented shape.
  CHECK(text.find("CHECK axiom1_positive_definiteness trials=400 failures=") !=
        std::string::npos);
  // Stored counterexamples are indented trial lines; the overflow is elided.
  CHECK(text.find("  trial ") != std::string::npos);
  CHECK(text.find(" more failures not shown") != std::string::npos);

  // Passing checks emit exactly one line and no witness block.
  const std::string sym_line = "CHECK axiom1_symmetry trials=400 failures=0\n";
  const auto at = text.find(sym_line);
  REQUIRE(at != std::string::npos);
  const std::string next = text.substr(at + sym_line.size(), 6);
  CHECK(next.substr(0, 5) == "CHECK");
}

TEST_CASE("minimized witnesses stay small") {
  harness::TrialConfig cfg = small_config();
  cfg.trials = 10;
  const arrows::NegatedMetric bad(arrows::euclidean());
  const harness::Report report = harness::run_axiom_suite(cfg, bad);
  for (const auto& check : report.checks) {
    if (check.name != "axiom1_positive_definiteness") continue;
    REQUIRE_FALSE(check.stored.empty());
    // The minimizer zeroes every coordinate it can; what survives in the
    // witness of "some nondegenerate arrow has nonpositive measure" is a
    // single +/-1 somewhere: the serialized arrow never needs big numerators.
    for (const auto& failure : check.stored) {
      CHECK(failure.witness.find('=') != std::string::npos);
      CHECK(failure.witness.size() < 80);
    }
  }
}

TEST_CASE("zero trials yield an empty report that passes vacuously") {
  harness::TrialConfig cfg = small_config();
  cfg.trials = 0;
  const harness::Report report = harness::run_theorem_suite(cfg);
  CHECK(report.checks.empty());
  CHECK(report.all_passed());
  CHECK(report.to_text().empty());
}

TEST_CASE("suites run in every supported small dimension") {
  for (std::size_t dim : {1u, 2u, 3u, 4u}) {
    harness::TrialConfig cfg = small_config();
    cfg.trials = 25;
    cfg.dim = dim;
    CAPTURE(dim);
    CHECK(harness::run_axiom_suite(cfg).all_passed());
    CHECK(harness::run_theorem_suite(cfg).all_passed());
  }
}

}  // TEST_SUITE
