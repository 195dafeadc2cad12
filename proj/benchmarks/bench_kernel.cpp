// Microbenchmarks for the hot paths: exact rational arithmetic, the
// pre-inner product, class addition (both routes), projection, and a small
// harness run. Numbers here guide optimization; correctness lives in tests/.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "arrows/arrows.hpp"

namespace {

using arrows::Arrow;
using arrows::Point;
using arrows::Rational;
using arrows::Vector;

// Deterministic mid-sized rationals; denominators are coprime often enough to
// keep gcd work honest.
std::vector<Rational> sample_rationals(std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  arrows::harness::Rng rng(7);
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.next_rational(1000, 97));
  return out;
}

Point sample_point(std::uint64_t seed, std::size_t dim) {
  arrows::harness::Rng rng(seed);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(rng.next_rational(50, 12));
  return Point(std::move(c));
}

void BM_RationalAdd(benchmark::State& state) {
  const auto qs = sample_rationals(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qs[i % 256] + qs[(i + 1) % 256]);
    ++i;
  }
}
BENCHMARK(BM_RationalAdd);

void BM_RationalMul(benchmark::State& state) {
  const auto qs = sample_rationals(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qs[i % 256] * qs[(i + 1) % 256]);
    ++i;
  }
}
BENCHMARK(BM_RationalMul);

void BM_PreInner(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const Arrow a(sample_point(1, dim), sample_point(2, dim));
  const Arrow b(sample_point(3, dim), sample_point(4, dim));
  for (auto _ : state) {
    benchmark::DoNotOptimize(arrows::pre_inner(a, b));
  }
}
BENCHMARK(BM_PreInner)->Arg(2)->Arg(4)->Arg(16);

void BM_ScalarMul(benchmark::State& state) {
  const Arrow a(sample_point(5, 4), sample_point(6, 4));
  const Rational t(7, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arrows::scalar_mul(t, a));
  }
}
BENCHMARK(BM_ScalarMul);

void BM_VecAddDisplacement(benchmark::State& state) {
  const Vector u = arrows::to_vector(Arrow(sample_point(7, 4), sample_point(8, 4)));
  const Vector v = arrows::to_vector(Arrow(sample_point(9, 4), sample_point(10, 4)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(arrows::vec_add(u, v));
  }
}
BENCHMARK(BM_VecAddDisplacement);

void BM_VecAddTransportRoute(benchmark::State& state) {
  const Vector u = arrows::to_vector(Arrow(sample_point(7, 4), sample_point(8, 4)));
  const Vector v = arrows::to_vector(Arrow(sample_point(9, 4), sample_point(10, 4)));
  const Point anchor = sample_point(11, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arrows::vec_add_at(u, v, anchor));
  }
}
BENCHMARK(BM_VecAddTransportRoute);

void BM_ProjectPoint(benchmark::State& state) {
  const Point o = sample_point(12, 4);
  Point g = sample_point(13, 4);
  if (g == o) g = arrows::translate(g, {Rational(1), Rational(0), Rational(0), Rational(0)});
  const Point p = sample_point(14, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arrows::project_point(o, g, p));
  }
}
BENCHMARK(BM_ProjectPoint);

void BM_Barycenter(benchmark::State& state) {
  arrows::BarycenterSpec spec;
  spec.points = {sample_point(15, 3), sample_point(16, 3), sample_point(17, 3)};
  spec.weights = {Rational(1, 6), Rational(1, 3), Rational(1, 2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(arrows::barycenter(spec));
  }
}
BENCHMARK(BM_Barycenter);

void BM_AxiomSuite(benchmark::State& state) {
  arrows::harness::TrialConfig cfg;
  cfg.trials = static_cast<std::uint64_t>(state.range(0));
  cfg.dim = 2;
  cfg.seed = 17;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arrows::harness::run_axiom_suite(cfg));
  }
}
BENCHMARK(BM_AxiomSuite)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
