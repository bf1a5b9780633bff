#include <benchmark/benchmark.h>

#include <random>

#include "nilorb/oracle.hpp"

using namespace nilorb;

namespace {

void BM_Enumerate(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    auto classes = enumerate_orbits(n, FieldMode::closed_char0());
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(BM_Enumerate)->Arg(7)->Arg(22)->Arg(50);

void BM_RankDense(benchmark::State& state) {
  long n = state.range(0);
  PrimeField f(7);
  std::mt19937_64 rng(1);
  DenseMat<PrimeField> m(f, 2 * n);
  for (long i = 0; i < 2 * n; ++i)
    for (long j = 0; j < 2 * n; ++j) m.at(i, j) = rng() % 7;
  for (auto _ : state) benchmark::DoNotOptimize(rank_dense(m));
}
BENCHMARK(BM_RankDense)->Arg(8)->Arg(16)->Arg(32);

void BM_JordanType(benchmark::State& state) {
  long n = state.range(0);
  RationalField q;
  // the (P3-style) full case-1 element [[0,1],[X^3, X^2]]
  std::vector<mpq_class> c(3, 0), d(2, 0);
  c.push_back(1);
  d.push_back(1);
  auto e = make_element(q, n, {}, {mpq_class(1)}, c, d);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_type(e));
}
BENCHMARK(BM_JordanType)->Arg(6)->Arg(10)->Arg(14);

void BM_ExhaustiveOracle(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    auto types = exhaustive_types(n, 2, 1);
    benchmark::DoNotOptimize(types);
  }
}
BENCHMARK(BM_ExhaustiveOracle)->Arg(2)->Arg(3);

void BM_WitnessTotality(benchmark::State& state) {
  long n = state.range(0);
  RationalField q;
  auto classes = enumerate_orbits(n, FieldMode::guaranteed_only());
  for (auto _ : state)
    for (const auto& oc : classes)
      benchmark::DoNotOptimize(build_witness(q, n, oc));
}
BENCHMARK(BM_WitnessTotality)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
