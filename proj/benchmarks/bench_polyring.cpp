#include <benchmark/benchmark.h>

#include <random>

#include "qcongr/qspecial.hpp"
#include "qcongr/rat_poly.hpp"

using namespace qcongr;

namespace {

IntPoly random_poly(std::size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Integer> c(len);
  for (auto& x : c) x = static_cast<long>(rng() % 2001) - 1000;
  c.back() = 1;
  return IntPoly(std::move(c));
}

void BM_MultiplySchoolbook(benchmark::State& state) {
  const auto a = random_poly(static_cast<std::size_t>(state.range(0)), 1);
  const auto b = random_poly(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_schoolbook(a, b));
}
BENCHMARK(BM_MultiplySchoolbook)->RangeMultiplier(4)->Range(16, 1024);

void BM_MultiplyKaratsuba(benchmark::State& state) {
  const auto a = random_poly(static_cast<std::size_t>(state.range(0)), 1);
  const auto b = random_poly(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_karatsuba(a, b));
}
BENCHMARK(BM_MultiplyKaratsuba)->RangeMultiplier(4)->Range(16, 1024);

void BM_PrimitiveGcd(benchmark::State& state) {
  const auto common = random_poly(static_cast<std::size_t>(state.range(0)), 3);
  const auto a = common * random_poly(static_cast<std::size_t>(state.range(0)), 4);
  const auto b = common * random_poly(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(primitive_gcd(a, b));
}
BENCHMARK(BM_PrimitiveGcd)->RangeMultiplier(2)->Range(8, 128);

void BM_Cyclotomic(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    QObjectCache cache;
    benchmark::DoNotOptimize(cache.cyclotomic(n));
  }
}
BENCHMARK(BM_Cyclotomic)->Arg(105)->Arg(360)->Arg(1001);

void BM_QBinomialRow(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    for (long k = 0; k <= n; ++k) benchmark::DoNotOptimize(q_binomial(n, k));
  }
}
BENCHMARK(BM_QBinomialRow)->Arg(20)->Arg(60);

}  // namespace
