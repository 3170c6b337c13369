#include <benchmark/benchmark.h>

#include "higherk/homology.hpp"
#include "higherk/module.hpp"
#include "higherk/quiver.hpp"
#include "higherk/tilting.hpp"

using namespace higherk;

namespace {

AlgebraPtr linear(std::size_t n) {
  std::vector<std::string> v;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i)
    arrows.emplace_back("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  return build_algebra(Quiver(v, arrows), {}, n);
}

Representation big_sum(const AlgebraPtr& a, std::size_t copies) {
  std::vector<Representation> parts;
  for (std::size_t k = 0; k < copies; ++k)
    for (std::size_t v = 0; v < a->vertex_count(); ++v) parts.push_back(indecomposable_projective(a, v));
  return direct_sum(parts, a);
}

void BM_HomBasis(benchmark::State& state) {
  auto a = linear(4);
  auto m = big_sum(a, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(m, m));
}
BENCHMARK(BM_HomBasis)->Arg(1)->Arg(2)->Arg(3);

void BM_Decompose(benchmark::State& state) {
  auto a = linear(4);
  auto m = big_sum(a, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(2);

void BM_Enumerate(benchmark::State& state) {
  auto a = linear(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_indecomposables(a));
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4)->Arg(5);

void BM_ProjectiveResolution(benchmark::State& state) {
  auto a = linear(5);
  auto s = simple_module(a, 0);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_projective_resolution(s, 4));
}
BENCHMARK(BM_ProjectiveResolution);

}  // namespace
