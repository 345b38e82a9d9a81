#include <benchmark/benchmark.h>

#include <random>

#include "nega/constructions.hpp"
#include "nega/correlation.hpp"
#include "nega/cyclotomic.hpp"
#include "nega/search.hpp"
#include "nega/transforms.hpp"

namespace {

using namespace nega;

GenFunction random_function(int q, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Modulus m(q);
  std::vector<int> v(table_size(m, n));
  for (auto& x : v) x = static_cast<int>(rng() % static_cast<unsigned>(2 * q));
  return GenFunction(m, n, v);
}

// Args: q, n.
void BM_SpectrumFloat(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(full_spectrum(f, Backend::floating));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_SpectrumFloat)->Args({2, 8})->Args({3, 5})->Args({4, 4})->Args({6, 3});

void BM_SpectrumExact(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(full_spectrum(f, Backend::exact));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_SpectrumExact)->Args({2, 6})->Args({3, 4})->Args({4, 3})->Args({6, 3});

void BM_NegabentViaNac(benchmark::State& state) {
  const auto f = even_quadratic(Modulus(static_cast<int>(state.range(0))), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(is_negabent_via_nac(f));
}
BENCHMARK(BM_NegabentViaNac)->Args({2, 4})->Args({4, 3});

void BM_CycloMultiply(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  CycloElement a = CycloElement::root_power(m, 1) + CycloElement::root_power(m, m / 3);
  CycloElement b = CycloElement::root_power(m, 2) - CycloElement::root_power(m, m / 2);
  for (int k = 0; k < 6; ++k) a = a * b + b;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMultiply)->Arg(8)->Arg(24)->Arg(60);

void BM_CycloIsZero(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  CycloElement z(m);
  for (int k = 0; k < m; ++k) z += CycloElement::root_power(m, k);
  for (auto _ : state) benchmark::DoNotOptimize(z.is_zero());
}
BENCHMARK(BM_CycloIsZero)->Arg(8)->Arg(24)->Arg(60);

void BM_SearchQ2N2(benchmark::State& state) {
  const SearchSpace space(Modulus(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(search_negabent(space, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SearchQ2N2)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
