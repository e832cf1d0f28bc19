#include <benchmark/benchmark.h>

#include "helly/constructions.hpp"
#include "helly/selection.hpp"

namespace {

helly::GenSpec random_spec(std::size_t dim, std::size_t n) {
  helly::GenSpec spec;
  spec.dim = dim;
  spec.n = n;
  spec.lattice = 1000;
  spec.seed = 7;
  return spec;
}

void BM_StrongHelly(benchmark::State& state) {
  const auto family = helly::gen_random(random_spec(static_cast<std::size_t>(state.range(0)),
                                                    static_cast<std::size_t>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(helly::strong_helly_witness(family));
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_StrongHelly)->ArgsProduct({{2, 4}, {64, 512, 4096}})->Complexity();

void BM_ColorfulSelect(benchmark::State& state) {
  helly::GenSpec spec = random_spec(3, 0);
  spec.classes = 6;
  spec.class_size = static_cast<std::size_t>(state.range(0));
  const auto classes = helly::gen_random_classes(spec);
  for (auto _ : state) benchmark::DoNotOptimize(helly::colorful_select(classes));
}
BENCHMARK(BM_ColorfulSelect)->Arg(16)->Arg(256)->Arg(2048);

void BM_WeakColorful(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  helly::GenSpec spec = random_spec(2, 0);
  spec.halfspaces = 2 * k + 1;
  spec.classes = k + 1;
  spec.class_size = static_cast<std::size_t>(state.range(1));
  const auto classes = helly::gen_random_classes(spec);
  for (auto _ : state) benchmark::DoNotOptimize(helly::weak_colorful_helly(classes));
}
BENCHMARK(BM_WeakColorful)->Args({1, 16})->Args({1, 1024})->Args({2, 2048})->Unit(benchmark::kMillisecond);

void BM_ConsistentChain(benchmark::State& state) {
  const auto family = helly::gen_random(random_spec(2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(helly::consistent_chain(family, 4));
}
BENCHMARK(BM_ConsistentChain)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace
