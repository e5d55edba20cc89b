#include <benchmark/benchmark.h>

#include "shuffle_detail.hpp"
#include "shuffleforge/subalg.hpp"

using namespace shuffleforge;

namespace {

LaurentPoly dense_poly(int vars, int degree) {
  LaurentPoly f(1);
  for (int i = 0; i < vars; ++i) f += LaurentPoly::var(VarId::x(i % 3, i / 3));
  LaurentPoly p(1);
  for (int d = 0; d < degree; ++d) p *= f;
  return p;
}

void BM_MulSerial(benchmark::State& state) {
  LaurentPoly a = dense_poly(4, static_cast<int>(state.range(0)));
  LaurentPoly b = dense_poly(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_serial(a, b));
}

void BM_MulParallel(benchmark::State& state) {
  LaurentPoly a = dense_poly(4, static_cast<int>(state.range(0)));
  LaurentPoly b = dense_poly(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_parallel(a, b));
}

std::pair<ShuffleElement, ShuffleElement> operands(int k) {
  return {gen_F_k(3, k), gen_F_k(3, 1)};
}

void BM_AntisymSerial(benchmark::State& state) {
  auto [f, g] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::antisymmetrized_serial(f, g));
}

void BM_AntisymParallel(benchmark::State& state) {
  auto [f, g] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::antisymmetrized_parallel(f, g));
}

void BM_AntisymCompact(benchmark::State& state) {
  auto [f, g] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(detail::antisymmetrized_compact(f, g));
}

}  // namespace

BENCHMARK(BM_MulSerial)->Arg(4)->Arg(6);
BENCHMARK(BM_MulParallel)->Arg(4)->Arg(6);
BENCHMARK(BM_AntisymSerial)->Arg(1);
BENCHMARK(BM_AntisymParallel)->Arg(1);
BENCHMARK(BM_AntisymCompact)->Arg(1);

BENCHMARK_MAIN();
