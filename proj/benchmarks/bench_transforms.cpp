#include <benchmark/benchmark.h>

#include "superfast/basis_rotation.hpp"
#include "superfast/jordan_wigner.hpp"
#include "superfast/lattice_integrals.hpp"
#include "superfast/superfast_encoding.hpp"

using namespace superfast;

namespace {

ClassifiedHamiltonian chain_hamiltonian(int n, double exponent) {
  LatticeSpec spec;
  spec.dimension = 1;
  spec.side_length = n;
  spec.exponent = exponent;
  const auto raw = compute_integrals(build_lattice(spec), exponent, 1);
  const auto rot = rotate_integrals(raw, symmetric_orthogonalizer(raw.overlap).x, 1);
  const auto h = FermionHamiltonian::from_spatial_integrals(rot.one_body, rot.two_body, rot.constant,
                                                            SpinOrdering::Blocked, 1e-7);
  return classify(h, 1e-7);
}

void BM_JordanWigner(benchmark::State& state) {
  const auto h = chain_hamiltonian(static_cast<int>(state.range(0)), 8.75);
  for (auto _ : state) benchmark::DoNotOptimize(jw_transform(h));
}
BENCHMARK(BM_JordanWigner)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SuperfastEncoding(benchmark::State& state) {
  const auto h = chain_hamiltonian(static_cast<int>(state.range(0)), 8.75);
  const auto g = build_interaction_graph(h);
  for (auto _ : state) benchmark::DoNotOptimize(ose_transform(h, g, kSimplifyEpsilon, 1));
}
BENCHMARK(BM_SuperfastEncoding)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_LoopStabilizers(benchmark::State& state) {
  const auto h = chain_hamiltonian(static_cast<int>(state.range(0)), 3.0);
  const auto g = build_interaction_graph(h);
  for (auto _ : state) benchmark::DoNotOptimize(loop_stabilizers(g));
}
BENCHMARK(BM_LoopStabilizers)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
