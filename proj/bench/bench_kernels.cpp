// Serial reference against the OpenMP kernels. Argument 0 is serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "dsop/roots.hpp"
#include "dsop/sobolev.hpp"
#include "dsop/verify.hpp"

using namespace dsop;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

SobolevSpec four_masses() {
  return SobolevSpec(LaguerreParam::exact(0), {{Rational(-1), 0, Rational(10)},
                                               {Rational(-3), 1, Rational(5)},
                                               {Rational(-9), 1, Rational(5)},
                                               {Rational(-10), 3, Rational(20)}});
}

void BM_GramMatrix(benchmark::State& state) {
  const auto spec = four_masses();
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix<Rational>(static_cast<std::size_t>(state.range(0)), spec, exec_of(state)));
}

void BM_KernelEval(benchmark::State& state) {
  const Rational x(-7, 3), y(-4);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernel_eval(static_cast<std::size_t>(state.range(0)), 1, 2, x, y, 1, exec_of(state)));
}

void BM_ConnectionSolve(benchmark::State& state) {
  const auto spec = four_masses();
  for (auto _ : state) benchmark::DoNotOptimize(connection_solve(static_cast<std::size_t>(state.range(0)), spec, exec_of(state)));
}

void BM_SignChangeSweep(benchmark::State& state) {
  const auto spec = four_masses();
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_sweep(static_cast<std::size_t>(state.range(0)), spec, exec_of(state)));
}

void BM_Roots(benchmark::State& state) {
  const QPoly s = sobolev_poly_exact(static_cast<std::size_t>(state.range(0)), four_masses());
  RootOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(all_roots_float(s, options));
}

}  // namespace

BENCHMARK(BM_GramMatrix)->ArgsProduct({{20, 40}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelEval)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectionSolve)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignChangeSweep)->ArgsProduct({{20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Roots)->ArgsProduct({{30, 60}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
