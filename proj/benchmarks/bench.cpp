#include <benchmark/benchmark.h>

#include <random>

#include "origami/distribution.hpp"
#include "origami/origami.hpp"
#include "origami/perm.hpp"
#include "origami/wreath.hpp"
#include "origami/wreath_chars.hpp"
#include "origami/young.hpp"

using namespace origami;

namespace {

void bm_character_table(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(character_table(n));
  }
}
BENCHMARK(bm_character_table)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void bm_f_lambda_staircase(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  std::vector<int> parts;
  for (int r = rows; r >= 1; --r) parts.push_back(r);
  const Partition lam(parts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_lambda(lam));
  }
}
BENCHMARK(bm_f_lambda_staircase)->Arg(10)->Arg(20)->Arg(40);

void bm_surface_invariants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 eng(7);
  const Origami o =
      make_origami(n, random_permutation(n, eng), random_permutation(n, eng), true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(surface_invariants(o));
  }
}
BENCHMARK(bm_surface_invariants)->Arg(100)->Arg(1000)->Arg(10000);

void bm_vertex_orbits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 eng(7);
  const Origami o =
      make_origami(n, random_permutation(n, eng), random_permutation(n, eng), true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vertex_orbits(o));
  }
}
BENCHMARK(bm_vertex_orbits)->Arg(100)->Arg(1000);

void bm_sample_genus(benchmark::State& state) {
  SamplerConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.samples = 1000;
  cfg.seed = 99;
  cfg.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_genus_distribution(cfg));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 1000);
}
BENCHMARK(bm_sample_genus)->Args({100, 1})->Args({100, 4})->Args({1000, 1})->Args({1000, 4})
    ->Unit(benchmark::kMillisecond);

void bm_wreath_multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 eng(11);
  WreathElement a{parse_cycles("(1 3)(2 4)", 4), {}};
  WreathElement b{parse_cycles("(1 2 3 4)", 4), {}};
  for (int i = 0; i < 4; ++i) {
    a.bottom.push_back(random_permutation(n, eng));
    b.bottom.push_back(random_permutation(n, eng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(w_multiply(a, b));
  }
}
BENCHMARK(bm_wreath_multiply)->Arg(10)->Arg(100)->Arg(1000);

void bm_cycle_products(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 eng(13);
  WreathElement a{parse_cycles("(1 2 3 4)", 4), {}};
  for (int i = 0; i < 4; ++i) a.bottom.push_back(random_permutation(n, eng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cycle_products(a));
  }
}
BENCHMARK(bm_cycle_products)->Arg(10)->Arg(100)->Arg(1000);

void bm_reduced_probability(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition rho({n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_probability(n, rho));
  }
}
BENCHMARK(bm_reduced_probability)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void bm_diagonal_system(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irreducible_system(n, TableMode::DiagonalOnly));
  }
}
BENCHMARK(bm_diagonal_system)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void bm_stirling_first_kind(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stirling_first_kind(n));
  }
}
BENCHMARK(bm_stirling_first_kind)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
