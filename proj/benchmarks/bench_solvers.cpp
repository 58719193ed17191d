#include <benchmark/benchmark.h>

#include "ptp/ptp.hpp"

using namespace ptp;

namespace {

Hamiltonian ho() {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{1, 0}, {0, 0}, 2});
  return h;
}

Hamiltonian shifted_osc() {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{1, 0}, {0, 1}, 2});
  h.potential.add(ShiftedPower{{0.3125, 0}, {0, 1}, -2});
  return h;
}

void BM_Discretize(benchmark::State& state) {
  const auto h = shifted_osc();
  const auto c = Contour::shifted_line(-12, 12, -1,
                                       static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(discretize(h, c));
}
BENCHMARK(BM_Discretize)->Arg(1000)->Arg(4000);

void BM_SturmBisection(benchmark::State& state) {
  const auto op =
      discretize(ho(), Contour::real_line(-12, 12,
                                          static_cast<int>(state.range(0))));
  const auto diag = op.real_diag();
  for (auto _ : state)
    benchmark::DoNotOptimize(eig_sym_tridiag(diag, op.off.real(), 6));
}
BENCHMARK(BM_SturmBisection)->Arg(1000)->Arg(4000);

void BM_ComplexQR(benchmark::State& state) {
  const auto op = discretize(
      shifted_osc(), Contour::shifted_line(-12, 12, -1,
                                           static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(eig_complex_tridiag(op, 6));
}
BENCHMARK(BM_ComplexQR)->Arg(500)->Arg(1000)->Arg(2000);

void BM_ShootResidual(benchmark::State& state) {
  const auto h = ho();
  const auto c =
      Contour::real_line(-10, 10, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(shoot_residual(h, c, Complex{1.0, 0.0}));
}
BENCHMARK(BM_ShootResidual)->Arg(2000)->Arg(8000);

void BM_InverseIteration(benchmark::State& state) {
  const auto op = discretize(
      ho(), Contour::real_line(-10, 10, static_cast<int>(state.range(0))));
  const auto ev = eig_complex_tridiag(op, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(eigenvector_inverse_iteration(op, ev[0]));
}
BENCHMARK(BM_InverseIteration)->Arg(1000)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
