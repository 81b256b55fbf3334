#include <benchmark/benchmark.h>

#include "qwalk2/evolution.hpp"
#include "qwalk2/hamiltonian.hpp"
#include "qwalk2/observables.hpp"
#include "qwalk2/waveguide.hpp"

namespace {

qwalk2::LatticeSpec bench_spec(int L) {
  qwalk2::LatticeSpec spec;
  spec.L = L;
  spec.V = 1.0;
  spec.statistics = qwalk2::Statistics::Bose;
  return spec;
}

struct EvolveFixture {
  explicit EvolveFixture(int L)
      : h(qwalk2::build_two_particle_hamiltonian(bench_spec(L))),
        dec(qwalk2::decompose(h)),
        psi0(qwalk2::initial_pair_state(h.basis, 0, 1)),
        times(qwalk2::uniform_times(4.0, 201)) {}
  qwalk2::HamiltonianMatrix h;
  qwalk2::SpectralDecomposition dec;
  qwalk2::TwoParticleState psi0;
  std::vector<double> times;
};

void BM_EvolveSerial(benchmark::State& state) {
  const EvolveFixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qwalk2::evolve_serial(f.dec, f.psi0, f.times));
}
BENCHMARK(BM_EvolveSerial)->Arg(10)->Arg(20);

void BM_EvolveParallel(benchmark::State& state) {
  const EvolveFixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qwalk2::evolve(f.dec, f.psi0, f.times));
}
BENCHMARK(BM_EvolveParallel)->Arg(10)->Arg(20);

void BM_MomentumSerial(benchmark::State& state) {
  const EvolveFixture f(static_cast<int>(state.range(0)));
  const qwalk2::TwoParticleState psi{f.psi0.basis, f.dec.propagate(f.psi0.amplitudes, 2.0), 2.0};
  const auto phi = qwalk2::pair_amplitude(psi);
  for (auto _ : state) benchmark::DoNotOptimize(qwalk2::momentum_correlation_serial(phi));
}
BENCHMARK(BM_MomentumSerial)->Arg(10)->Arg(20);

void BM_MomentumParallel(benchmark::State& state) {
  const EvolveFixture f(static_cast<int>(state.range(0)));
  const qwalk2::TwoParticleState psi{f.psi0.basis, f.dec.propagate(f.psi0.amplitudes, 2.0), 2.0};
  const auto phi = qwalk2::pair_amplitude(psi);
  for (auto _ : state) benchmark::DoNotOptimize(qwalk2::momentum_correlation(phi));
}
BENCHMARK(BM_MomentumParallel)->Arg(10)->Arg(20);

void BM_Decompose(benchmark::State& state) {
  const auto h = qwalk2::build_two_particle_hamiltonian(bench_spec(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(qwalk2::decompose(h));
}
BENCHMARK(BM_Decompose)->Arg(10)->Arg(20);

void BM_FieldPropagateSerial(benchmark::State& state) {
  const auto layout = qwalk2::build_layout(bench_spec(10), qwalk2::Boundary::Periodic);
  qwalk2::FieldState e0{Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.size())), 0.0};
  e0.E(0) = 1.0;
  const auto z = qwalk2::uniform_times(4.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(qwalk2::propagate_field_serial(layout, e0, z));
}
BENCHMARK(BM_FieldPropagateSerial);

void BM_FieldPropagateParallel(benchmark::State& state) {
  const auto layout = qwalk2::build_layout(bench_spec(10), qwalk2::Boundary::Periodic);
  qwalk2::FieldState e0{Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.size())), 0.0};
  e0.E(0) = 1.0;
  const auto z = qwalk2::uniform_times(4.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(qwalk2::propagate_field(layout, e0, z));
}
BENCHMARK(BM_FieldPropagateParallel);

}  // namespace

BENCHMARK_MAIN();
