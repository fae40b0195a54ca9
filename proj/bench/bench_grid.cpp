#include <benchmark/benchmark.h>

#include "staircase/family.hpp"
#include "staircase/grid.hpp"
#include "staircase/region.hpp"

using namespace staircase;

namespace {

Family make_family(int depth) {
  Region A = Region::closed(Rational(1, 10), Rational(2, 10));
  Region B = region_union(Region::closed(Rational(6, 10), Rational(7, 10)),
                          Region::closed(Rational(9, 10), Rational(1)));
  return build_classical_family(A, B, depth);
}

void bench_evaluate_parallel(benchmark::State& state) {
  const int depth = int(state.range(0));
  Family fam = make_family(depth);
  auto xs = uniform_grid(long(state.range(1)));
  for (auto _ : state) {
    auto out = evaluate_points(fam, xs, depth);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(xs.size()));
}

void bench_evaluate_serial(benchmark::State& state) {
  const int depth = int(state.range(0));
  Family fam = make_family(depth);
  auto xs = uniform_grid(long(state.range(1)));
  for (auto _ : state) {
    auto out = evaluate_points_reference(fam, xs, depth);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(xs.size()));
}

void bench_nesting_parallel(benchmark::State& state) {
  Family fam = make_family(int(state.range(0)));
  for (auto _ : state) {
    auto out = check_nesting_all_pairs(fam);
    benchmark::DoNotOptimize(out);
  }
}

void bench_nesting_serial(benchmark::State& state) {
  Family fam = make_family(int(state.range(0)));
  for (auto _ : state) {
    auto out = check_nesting_all_pairs_reference(fam);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(bench_evaluate_parallel)
    ->Args({8, 2000})
    ->Args({10, 2000})
    ->Args({10, 20000});
BENCHMARK(bench_evaluate_serial)
    ->Args({8, 2000})
    ->Args({10, 2000})
    ->Args({10, 20000});
BENCHMARK(bench_nesting_parallel)->Arg(7)->Arg(9);
BENCHMARK(bench_nesting_serial)->Arg(7)->Arg(9);

BENCHMARK_MAIN();
