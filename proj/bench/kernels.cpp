// Serial reference loop vs OpenMP for the grid-level kernels.
// Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <cmath>

#include "lightcone/debranges.hpp"
#include "lightcone/htransform.hpp"
#include "lightcone/kleingordon.hpp"

using namespace lightcone;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_HTransform(benchmark::State& state) {
  HalfLineFunction f{[](double y) { return (1.0 - 0.5 * y) * std::exp(-0.8 * y); },
                     DecayHint::exponential(0.8)};
  TransformOptions to;
  to.execution = mode(state);
  const auto grid = log_uniform_grid(1e-3, 40.0, 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_transform(f, grid, GridKind::log_uniform, to));
  }
}

void BM_TraceK(benchmark::State& state) {
  const auto packet = WavePacket::from_function(
      [](double l) { return Complex(std::exp(-0.5 * std::pow((l - 2.0) / 0.35, 2))); },
      uniform_grid(0.05, 6.2, 600), Parity::even);
  const auto grid = log_uniform_grid(1e-3, 150.0, 512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_k(packet, grid, GridKind::log_uniform,
                                     DecayHint::exponential(1.0), mode(state)));
  }
}

void BM_Expand(benchmark::State& state) {
  HalfLineFunction k{[](double v) { return (1.0 + v) * std::exp(-v * v); },
                     DecayHint::exponential(3.0)};
  ExpansionOptions eo;
  eo.execution = mode(state);
  const auto grid = log_uniform_grid(1e-3, 20.0, 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(k, grid, GridKind::log_uniform, DecayHint::exponential(0.5), eo));
  }
}

void BM_MellinPath(benchmark::State& state) {
  const auto grid = log_uniform_grid(1e-3, 60.0, 1024);
  const auto g = SampledFunction::from_function([](double y) { return (1.0 + y) * std::exp(-y); },
                                                grid, GridKind::log_uniform,
                                                DecayHint::exponential(1.0));
  MellinPathOptions mo;
  mo.mellin.execution = mode(state);
  mo.output_decay = DecayHint::exponential(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_via_mellin(g, grid, GridKind::log_uniform, mo));
  }
}

}  // namespace

BENCHMARK(BM_HTransform)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceK)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Expand)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MellinPath)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
