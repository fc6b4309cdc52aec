// Serial reference vs OpenMP versions of the data-parallel kernels.
// Pass --benchmark_filter=... as usual; thread count follows OMP_NUM_THREADS.

#include "border3/kernels.hpp"
#include "border3/normal_forms.hpp"
#include "border3/random.hpp"
#include "border3/rank_oracle.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace border3;

namespace {

void BM_RankOracle(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const Tensor t = orbit_representative(37);
  for (auto _ : state) benchmark::DoNotOptimize(rank_over_field(t, 3, 6, jobs));
  state.SetLabel(jobs == 1 ? "serial" : "parallel");
}

struct WedgeInput {
  std::vector<Rational> pairs;
  Vector c;
};

WedgeInput wedge_input(std::size_t dim) {
  Sampler rng(17);
  WedgeInput in{std::vector<Rational>(kernels::pair_count(dim)), rng.vector(dim)};
  kernels::wedge2_accumulate(in.pairs, rng.vector(dim), rng.vector(dim));
  return in;
}

void BM_Wedge3Serial(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const WedgeInput in = wedge_input(dim);
  for (auto _ : state) {
    std::vector<Rational> out(kernels::triple_count(dim));
    kernels::wedge3_accumulate_serial(out, in.pairs, in.c);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_Wedge3Parallel(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const WedgeInput in = wedge_input(dim);
  for (auto _ : state) {
    std::vector<Rational> out(kernels::triple_count(dim));
    kernels::wedge3_accumulate_parallel(out, in.pairs, in.c, omp_get_max_threads());
    benchmark::DoNotOptimize(out.data());
  }
}

std::vector<Tensor> strassen_input(std::size_t n) {
  Sampler rng(23);
  std::vector<Tensor> batch;
  for (std::size_t i = 0; i < n; ++i) batch.push_back(rng.tensor({3, 3, 3}));
  return batch;
}

void BM_StrassenBatchSerial(benchmark::State& state) {
  const auto batch = strassen_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::strassen_batch_serial(batch));
}

void BM_StrassenBatchParallel(benchmark::State& state) {
  const auto batch = strassen_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::strassen_batch_parallel(batch));
}

}  // namespace

BENCHMARK(BM_RankOracle)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Wedge3Serial)->Arg(27)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Wedge3Parallel)->Arg(27)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StrassenBatchSerial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrassenBatchParallel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
