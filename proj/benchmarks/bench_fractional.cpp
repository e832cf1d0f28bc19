#include <benchmark/benchmark.h>

#include "helly/constructions.hpp"
#include "helly/fractional.hpp"

namespace {

const helly::MonotoneProperty kNonEmpty = helly::MonotoneProperty::non_empty();

helly::DenseInstance dense(std::size_t dim, std::size_t n, std::size_t r, const helly::Rational& alpha) {
  helly::GenSpec spec;
  spec.kind = helly::GenKind::Dense;
  spec.dim = dim;
  spec.n = n;
  spec.r = r;
  spec.alpha_target = alpha;
  spec.seed = 3;
  return helly::gen_dense(spec);
}

void BM_Density(benchmark::State& state) {
  const auto family = helly::gen_tight_fractional(2, static_cast<std::size_t>(state.range(0)));
  const auto r = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(helly::density(family, r, kNonEmpty));
}
BENCHMARK(BM_Density)->Args({40, 2})->Args({40, 3})->Args({24, 4})->Unit(benchmark::kMillisecond);

void BM_FractionalK(benchmark::State& state) {
  const auto inst = dense(2, static_cast<std::size_t>(state.range(0)), 4, helly::Rational(19, 20));
  for (auto _ : state) benchmark::DoNotOptimize(helly::fractional_k(inst.family, kNonEmpty, inst.density));
}
BENCHMARK(BM_FractionalK)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_FractionalPairs(benchmark::State& state) {
  const auto inst = dense(1, static_cast<std::size_t>(state.range(0)), 2, helly::Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(helly::fractional_pairs(inst.family, kNonEmpty, inst.density));
}
BENCHMARK(BM_FractionalPairs)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_PqPierce(benchmark::State& state) {
  helly::GenSpec spec;
  spec.dim = 1;
  spec.n = static_cast<std::size_t>(state.range(0));
  spec.lattice = 24;
  spec.seed = 5;
  const auto family = helly::gen_random(spec);
  for (auto _ : state) benchmark::DoNotOptimize(helly::pq_pierce(family, kNonEmpty, 4, 3));
}
BENCHMARK(BM_PqPierce)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
