#include <benchmark/benchmark.h>

#include "toricsec/constructors.hpp"
#include "toricsec/fibration.hpp"

using namespace toricsec;

static void BM_CohomologyProjective(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FanPtr pn = projective_space_fan(n);
  const TorusDivisor d = TorusDivisor::prime(pn, 0, -static_cast<Int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(d));
}
BENCHMARK(BM_CohomologyProjective)->Args({2, 8})->Args({3, 8})->Args({3, 20})->Args({4, 10});

static void BM_CohomologyHirzebruch(benchmark::State& state) {
  const FanPtr f = hirzebruch_fan(state.range(0));
  const TorusDivisor d(f, {-5, 3, -4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(d));
}
BENCHMARK(BM_CohomologyHirzebruch)->DenseRange(0, 3);

static void BM_ExtTableBeilinson(benchmark::State& state) {
  const Construction b = beilinson(static_cast<int>(state.range(0)));
  const CheckOptions opts{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(compute_ext_table(b.collection, opts));
}
BENCHMARK(BM_ExtTableBeilinson)->Args({3, 1})->Args({4, 1})->Args({4, 4});

static void BM_ExtTableProduct(benchmark::State& state) {
  const Construction p = product(beilinson(2).collection, beilinson(2).collection);
  const CheckOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(compute_ext_table(p.collection, opts));
}
BENCHMARK(BM_ExtTableProduct)->Arg(1)->Arg(4);

static void BM_TwistSearchHirzebruch(benchmark::State& state) {
  const Int a = state.range(0);
  const FibrationData fd = validate_fibration(hirzebruch_fan(a), projective_space_fan(1), IntMatrix{{1, 0}});
  const Collection fiber(fd.fiber, {TorusDivisor::zero(fd.fiber), TorusDivisor::prime(fd.fiber, 0)});
  const Collection base = beilinson(1).collection;
  const TorusDivisor ample = TorusDivisor::prime(fd.base, 0);
  for (auto _ : state) benchmark::DoNotOptimize(twist_search(fd, fiber, base, ample));
}
BENCHMARK(BM_TwistSearchHirzebruch)->DenseRange(0, 3);
BENCHMARK_MAIN();
