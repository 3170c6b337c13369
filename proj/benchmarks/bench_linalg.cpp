#include <benchmark/benchmark.h>

#include "higherk/linalg.hpp"
#include "higherk/random.hpp"

using namespace higherk;

namespace {

IntegerMatrix random_integer(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-20, 20);
  return m;
}

void BM_Smith(benchmark::State& state) {
  auto m = random_integer(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_Smith)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_RationalKernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  RationalMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      m(i, j) = Rational(rng.uniform(-9, 9), rng.uniform(1, 5));
      m(i, j).canonicalize();
    }
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_RationalKernel)->Arg(8)->Arg(16)->Arg(32);

void BM_Determinant(benchmark::State& state) {
  auto m = random_integer(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(32);

}  // namespace
