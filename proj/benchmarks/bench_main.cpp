#include <benchmark/benchmark.h>

#include <random>

#include "cozc/corpus.hpp"
#include "cozc/cozpart.hpp"
#include "cozc/cuts.hpp"
#include "cozc/verify.hpp"

using namespace cozc;

namespace {

void BM_BuildBoolean(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boolean_frame(n));
}
BENCHMARK(BM_BuildBoolean)->DenseRange(2, 6, 2);

void BM_EnumeratePosets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets(n));
}
BENCHMARK(BM_EnumeratePosets)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Combine(benchmark::State& state) {
  const auto f = boolean_frame(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto a = sample_step_function(f, rng), b = sample_step_function(f, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(combine(a, b, Op::Add));
    benchmark::DoNotOptimize(combine(a, b, Op::Mul));
  }
}
BENCHMARK(BM_Combine)->Arg(2)->Arg(4);

void BM_CutsAndRange(benchmark::State& state) {
  const auto f = boolean_frame(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(2);
  const auto a = sample_step_function(f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(range_via_cuts(a));
}
BENCHMARK(BM_CutsAndRange)->Arg(2)->Arg(4);

void BM_CozPart(benchmark::State& state) {
  const auto f = random_topology(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(coz_part(f));
}
BENCHMARK(BM_CozPart)->Arg(4)->Arg(6);

void BM_VerifySuite(benchmark::State& state) {
  const auto suite = static_cast<Suite>(state.range(0));
  const std::vector<Frame> frames{boolean_frame(3), chain_frame(5), random_topology(4, 1)};
  VerifyOptions options;
  options.suites = {suite};
  options.samples = 10;
  for (auto _ : state) benchmark::DoNotOptimize(verify_frames(frames, options));
  state.SetLabel(to_string(suite));
}
BENCHMARK(BM_VerifySuite)->DenseRange(0, 8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
