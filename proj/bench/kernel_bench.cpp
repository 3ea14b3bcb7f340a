// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "stratikit/families.hpp"
#include "stratikit/kernels.hpp"
#include "stratikit/suite.hpp"

using namespace stratikit;

namespace {

template <class K>
Matrix<K> random_matrix(const K& k, std::size_t r, std::size_t c, std::uint64_t seed) {
  Rng rng(seed);
  Matrix<K> m(k, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = k.from_int(static_cast<std::int64_t>(rng() % 19) - 9);
  return m;
}

template <class K, bool Parallel>
void bm_matmul(benchmark::State& state) {
  const K k;
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_matrix(k, n, n, 1), b = random_matrix(k, n, n, 2);
  for (auto _ : state) {
    auto c = Parallel ? parallel::matmul(a, b) : serial::matmul(a, b);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}

template <class K, bool Parallel>
void bm_rref(benchmark::State& state) {
  const K k;
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(k, n, 2 * n, 3);
  for (auto _ : state) {
    state.PauseTiming();
    auto m = a;
    state.ResumeTiming();
    auto piv = Parallel ? parallel::rref_inplace(m) : serial::rref_inplace(m);
    benchmark::DoNotOptimize(piv);
  }
}

void bm_suite_cent(benchmark::State& state) {
  for (auto _ : state) {
    auto r = run_suite(PrimeField(), 0, kDefaultCutoff, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(bm_matmul<PrimeField, false>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_matmul<PrimeField, true>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_matmul<RationalField, false>)->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(bm_matmul<RationalField, true>)->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(bm_rref<PrimeField, false>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_rref<PrimeField, true>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_rref<RationalField, false>)->RangeMultiplier(2)->Range(8, 32);
BENCHMARK(bm_rref<RationalField, true>)->RangeMultiplier(2)->Range(8, 32);
BENCHMARK(bm_suite_cent)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
