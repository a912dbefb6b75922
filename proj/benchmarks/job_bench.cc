#include <benchmark/benchmark.h>

#include "mrperf/job_model.h"
#include "mrperf/optimizer.h"
#include "support/reference_job.h"

namespace {

void BM_AnalyticJobCost(benchmark::State& state) {
  const mrperf::EffectiveInputs in = mrperf::normalize(mrperf::testing::reference_job_inputs());
  for (auto _ : state) benchmark::DoNotOptimize(mrperf::analytic_job_cost(in));
}
BENCHMARK(BM_AnalyticJobCost);

void BM_SimulateJob(benchmark::State& state) {
  const mrperf::EffectiveInputs in = mrperf::normalize(mrperf::testing::reference_job_inputs());
  for (auto _ : state) benchmark::DoNotOptimize(mrperf::simulate_job(in));
}
BENCHMARK(BM_SimulateJob);

void BM_OptimizeGrid(benchmark::State& state) {
  using mrperf::HadoopParam;
  mrperf::ParameterSpace space;
  std::vector<mrperf::ParamValue> reducers, fan_in;
  for (std::int64_t i = 1; i <= state.range(0); ++i) {
    reducers.push_back(i * 10);
    fan_in.push_back(i + 1);
  }
  space.add(HadoopParam::kNumReducers, reducers);
  space.add(HadoopParam::kSortFactor, fan_in);
  const mrperf::JobInputs base = mrperf::testing::reference_job_inputs();
  for (auto _ : state) benchmark::DoNotOptimize(mrperf::optimize(base, space));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_OptimizeGrid)->Arg(3)->Arg(10)->Arg(30);

}  // namespace
