#include <benchmark/benchmark.h>

#include "superfast/basis_rotation.hpp"
#include "superfast/lattice_integrals.hpp"

using namespace superfast;

namespace {

std::vector<Vec3> chain(int n) {
  LatticeSpec spec;
  spec.dimension = 1;
  spec.side_length = n;
  spec.exponent = 3.0;
  return build_lattice(spec);
}

void BM_BoysF0(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(boys_f0(t));
    t = t > 40.0 ? 0.0 : t + 0.37;
  }
}
BENCHMARK(BM_BoysF0);

void BM_ComputeIntegrals(benchmark::State& state) {
  const auto centers = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_integrals(centers, 3.0, 1));
}
BENCHMARK(BM_ComputeIntegrals)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_RotateIntegrals(benchmark::State& state) {
  const auto raw = compute_integrals(chain(static_cast<int>(state.range(0))), 3.0, 1);
  const auto x = symmetric_orthogonalizer(raw.overlap);
  for (auto _ : state) benchmark::DoNotOptimize(rotate_integrals(raw, x.x, 1));
}
BENCHMARK(BM_RotateIntegrals)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
