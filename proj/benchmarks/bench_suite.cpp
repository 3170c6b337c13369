#include <benchmark/benchmark.h>

#include "higherk/higher_ar.hpp"
#include "higherk/io.hpp"
#include "higherk/suite.hpp"

using namespace higherk;

namespace {

TiltingData load(const char* name) {
  return tilting_from_file(load_algebra_file(std::string(HIGHERK_BENCH_DATA_DIR) + "/" + name));
}

void BM_SuiteRad2(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.tilting = load("a3_rad2.json");
  cfg.probes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}
BENCHMARK(BM_SuiteRad2)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DArSequences(benchmark::State& state) {
  auto t = load("a4_rad2.json");
  for (auto _ : state)
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!t.projective[i]) benchmark::DoNotOptimize(d_ar_sequence(t, i));
}
BENCHMARK(BM_DArSequences)->Unit(benchmark::kMillisecond);

void BM_TowerStep(benchmark::State& state) {
  auto t = load("a2.json");
  for (auto _ : state) benchmark::DoNotOptimize(tower_step(t));
}
BENCHMARK(BM_TowerStep)->Unit(benchmark::kMillisecond);

}  // namespace
