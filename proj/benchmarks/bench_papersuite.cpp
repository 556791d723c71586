#include <benchmark/benchmark.h>

#include "qcongr/catalog.hpp"

using namespace qcongr;
using namespace qcongr::suite;

namespace {

void BM_LhsSum(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const long r = state.range(1);
  QObjectCache cache;
  for (auto _ : state) benchmark::DoNotOptimize(lhs_sum(n, r, cache));
}
BENCHMARK(BM_LhsSum)->Args({10, 1})->Args({20, 2})->Args({30, 3})->Args({12, -1})->Unit(benchmark::kMillisecond);

void BM_Harmonic(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  QObjectCache cache;
  for (auto _ : state) {
    benchmark::DoNotOptimize(harmonic1(n, cache));
    benchmark::DoNotOptimize(harmonic2(n, cache));
  }
}
BENCHMARK(BM_Harmonic)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_VerifyConj1(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  QObjectCache cache;
  for (auto _ : state) benchmark::DoNotOptimize(verify_statement({StatementKind::CONJ1, n, 2, {}}, cache));
}
BENCHMARK(BM_VerifyConj1)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
