#include <benchmark/benchmark.h>

#include "helly/constructions.hpp"
#include "helly/properties.hpp"

namespace {

void BM_FeasibleGeneral(benchmark::State& state) {
  helly::GenSpec spec;
  spec.dim = static_cast<std::size_t>(state.range(0));
  spec.halfspaces = static_cast<std::size_t>(state.range(1));
  spec.n = 64;
  spec.seed = 11;
  const auto family = helly::gen_random(spec);
  for (auto _ : state) {
    for (std::size_t i = 0; i < family.size(); ++i) benchmark::DoNotOptimize(helly::feasible(family.member(i)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(family.size()));
}
BENCHMARK(BM_FeasibleGeneral)->Args({2, 5})->Args({3, 6})->Args({3, 9});

void BM_VolumeProperty(benchmark::State& state) {
  const auto family = helly::gen_tight_colorful(static_cast<std::size_t>(state.range(0)), helly::Rational(1, 2));
  const auto property = helly::MonotoneProperty::volume_at_least(helly::Rational(1, 3));
  const auto all = helly::intersect(family);
  for (auto _ : state) benchmark::DoNotOptimize(helly::eval(property, all));
}
BENCHMARK(BM_VolumeProperty)->DenseRange(1, 4);

}  // namespace
