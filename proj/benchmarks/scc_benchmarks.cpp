#include <benchmark/benchmark.h>

#include "scc/converse.hpp"
#include "scc/d3c.hpp"
#include "scc/tradeoff.hpp"

namespace {

scc::JobSpec job_for(const scc::SchemeInstance& instance, int iva_bits) {
  scc::JobSpec job;
  job.num_nodes = instance.num_nodes;
  job.num_files = instance.num_files;
  job.file_bits = 32;
  job.iva_bits = iva_bits;
  job.output_bits = 32;
  job.seed = 1;
  return job;
}

void BM_BuildScheme(benchmark::State& state) {
  const scc::SchemeParams params{static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)),
                                 static_cast<int>(state.range(2)), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(scc::build_scheme(params));
  }
}
BENCHMARK(BM_BuildScheme)->Args({6, 3, 2})->Args({8, 4, 2})->Args({10, 5, 3});

void BM_ShufflePlan(benchmark::State& state) {
  const auto instance = scc::build_scheme(
      {static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
       static_cast<int>(state.range(2)), 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(scc::build_shuffle_plan(instance, 24));
  }
}
BENCHMARK(BM_ShufflePlan)->Args({6, 3, 2})->Args({8, 4, 2});

void BM_SimulateEndToEnd(benchmark::State& state) {
  const auto instance = scc::build_scheme(
      {static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
       static_cast<int>(state.range(2)), 1});
  const auto job = job_for(instance, 24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scc::simulate(instance, job));
  }
}
BENCHMARK(BM_SimulateEndToEnd)->Args({4, 2, 1})->Args({6, 3, 2});

void BM_CensusFull(benchmark::State& state) {
  const auto instance = scc::build_scheme(
      {static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
       static_cast<int>(state.range(2)), 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(scc::census_full(instance.placement, instance.assignment));
  }
}
BENCHMARK(BM_CensusFull)->Args({6, 3, 2})->Args({8, 4, 2});

void BM_OptimalLoadGrid(benchmark::State& state) {
  const int num_nodes = static_cast<int>(state.range(0));
  const scc::Rational step(1, 10);
  for (auto _ : state) {
    scc::Rational sum;
    for (scc::Rational r(1); r < scc::Rational(num_nodes); r += step) {
      for (scc::Rational c(1); c <= r; c += step) {
        sum += scc::optimal_load(r, c, num_nodes);
      }
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_OptimalLoadGrid)->Arg(10);

void BM_ExhaustiveSweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        scc::exhaustive_census_sweep(3, 3, scc::Rational(2), scc::Rational(4, 3)));
  }
}
BENCHMARK(BM_ExhaustiveSweep);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
