#include <benchmark/benchmark.h>

#include "oudesign/entropy.hpp"
#include "oudesign/imspe.hpp"
#include "oudesign/kriging.hpp"
#include "oudesign/optimize.hpp"
#include "oudesign/quadrature.hpp"

namespace {

using namespace oudesign;

const OuParams kParams = OuParams::normalized(2.4522, -4.1274);

void BM_ImspeClosed(benchmark::State& state) {
  const auto d = Design::equispaced(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(imspe_closed(d, kParams).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ImspeClosed)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_ImspeQuadrature(benchmark::State& state) {
  const auto d = Design::equispaced(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(imspe_quadrature(d, kParams).value);
}
BENCHMARK(BM_ImspeQuadrature)->RangeMultiplier(2)->Range(2, 32);

void BM_MspePoint(benchmark::State& state) {
  const KrigingSystem system(Design::equispaced(static_cast<std::size_t>(state.range(0))), kParams);
  for (auto _ : state) benchmark::DoNotOptimize(system.mspe(0.37));
}
BENCHMARK(BM_MspePoint)->RangeMultiplier(2)->Range(2, 32);

void BM_LogdetClosed(benchmark::State& state) {
  const auto d = Design::equispaced(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(logdet_C_closed(d, kParams));
}
BENCHMARK(BM_LogdetClosed)->RangeMultiplier(2)->Range(2, 64);

void BM_LogdetOracle(benchmark::State& state) {
  const auto d = Design::equispaced(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(logdet_C_oracle(d, kParams));
}
BENCHMARK(BM_LogdetOracle)->RangeMultiplier(2)->Range(2, 64);

void BM_OptimizeImspe(benchmark::State& state) {
  OptimizerConfig c;
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize_design(static_cast<std::size_t>(state.range(0)), kParams, c).value);
}
BENCHMARK(BM_OptimizeImspe)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
