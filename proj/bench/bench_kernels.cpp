#include <benchmark/benchmark.h>

#include "rq/kernels.hpp"
#include "rq/prime_families.hpp"

using namespace rq;

static void BM_ScanCovalencySerial(benchmark::State& state) {
  const OrderParam m(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::scan_covalency(m, m.value() + 2, Family::kSPrime));
}
BENCHMARK(BM_ScanCovalencySerial)->Arg(8)->Arg(10);

static void BM_ScanCovalencyOmp(benchmark::State& state) {
  const OrderParam m(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::scan_covalency(m, m.value() + 2, Family::kSPrime));
}
BENCHMARK(BM_ScanCovalencyOmp)->Arg(8)->Arg(10);

static void BM_CountFamilyPrimesSerial(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::count_family_primes(0, -5, x, 9));
}
BENCHMARK(BM_CountFamilyPrimesSerial)->Arg(1'000'000'000)->Arg(100'000'000'000);

static void BM_CountFamilyPrimesOmp(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::count_family_primes(0, -5, x, 9));
}
BENCHMARK(BM_CountFamilyPrimesOmp)->Arg(1'000'000'000)->Arg(100'000'000'000);

static void BM_ClassifyPrimesSerial(benchmark::State& state) {
  is_exceptional_arithmetic(67);  // builds the threshold cache off the clock
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::classify_primes(0, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ClassifyPrimesSerial)->Arg(50000);

static void BM_ClassifyPrimesOmp(benchmark::State& state) {
  is_exceptional_arithmetic(67);  // builds the threshold cache off the clock
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::classify_primes(0, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ClassifyPrimesOmp)->Arg(50000);

BENCHMARK_MAIN();
