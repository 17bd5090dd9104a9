#include <benchmark/benchmark.h>

#include "pelltrib/contfrac.hpp"
#include "pelltrib/pell.hpp"
#include "pelltrib/reduction.hpp"
#include "pelltrib/search.hpp"
#include "pelltrib/tribonacci.hpp"

using namespace pelltrib;

namespace {

void BM_Trib(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trib(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Trib)->Arg(100)->Arg(1000)->Arg(10000);

// fresh DAG each time, otherwise the cached enclosure is measured
void BM_ChiContinuedFraction(benchmark::State& state) {
  for (auto _ : state) {
    const BinetConstants bc = binet_constants();
    benchmark::DoNotOptimize(expand_until_q_exceeds(bc.chi, mpz_class("10000000000000000")));
  }
}
BENCHMARK(BM_ChiContinuedFraction)->Unit(benchmark::kMillisecond);

void BM_ReduceDeltaThree(benchmark::State& state) {
  for (auto _ : state) {
    const BinetConstants bc = binet_constants();
    ReductionInstance in;
    in.kappa = log(fundamental(3).delta) / bc.log_alpha;
    in.mu = bc.chi;
    in.M = mpz_class("10000000000000000");
    in.A = CertifiedReal::from_decimal("14.8");
    in.B = CertifiedReal::from_decimal("2.4");
    benchmark::DoNotOptimize(reduce(in));
  }
}
BENCHMARK(BM_ReduceDeltaThree)->Unit(benchmark::kMillisecond);

void BM_Sqfree(benchmark::State& state) {
  const mpz_class n = trib(static_cast<std::size_t>(state.range(0)));
  const mpz_class v = n * n - 1;
  for (auto _ : state) benchmark::DoNotOptimize(sqfree_decompose(v));
}
BENCHMARK(BM_Sqfree)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_TrivialSweepNoFactoring(benchmark::State& state) {
  SearchConfig c;
  c.factor = false;
  for (auto _ : state) benchmark::DoNotOptimize(trivial_case_sweep(c));
}
BENCHMARK(BM_TrivialSweepNoFactoring)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
