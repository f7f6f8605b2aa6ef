#include <benchmark/benchmark.h>

#include <random>

#include "superfast/pauli.hpp"

using namespace superfast;

namespace {

PauliString random_string(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 3);
  PauliString s(n);
  for (std::size_t q = 0; q < n; ++q) s.set(q, static_cast<Pauli>(d(rng)));
  return s;
}

void BM_MultiplyStrings(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_string(n, rng);
  const auto b = random_string(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_strings(a, b));
}
BENCHMARK(BM_MultiplyStrings)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_Simplify(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  const std::size_t n = 48;
  std::vector<PauliTerm> terms;
  std::vector<PauliString> pool;
  for (int i = 0; i < 200; ++i) pool.push_back(random_string(n, rng));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < state.range(0); ++i) terms.emplace_back(Complex{u(rng), 0.0}, pool[pick(rng)]);
  const PauliOperatorSum s(n, terms);
  for (auto _ : state) benchmark::DoNotOptimize(simplify(s, kSimplifyEpsilon));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simplify)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SumProduct(benchmark::State& state) {
  std::mt19937 rng(3);
  const std::size_t n = 32;
  std::vector<PauliTerm> a, b;
  for (int i = 0; i < state.range(0); ++i) {
    a.emplace_back(Complex{1.0, 0.0}, random_string(n, rng));
    b.emplace_back(Complex{0.5, 0.0}, random_string(n, rng));
  }
  const PauliOperatorSum x(n, a), y(n, b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_SumProduct)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
