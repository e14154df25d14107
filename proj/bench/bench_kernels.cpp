// Serial reference vs OpenMP kernels on the larger desk instances.

#include <benchmark/benchmark.h>

#include "althecke/alternating.hpp"

using namespace althecke;

namespace {

AlgebraParams instance(int which) {
  switch (which) {
    case 0: return AlgebraParams::root_of_unity(5, {0}, 7);
    case 1: return AlgebraParams::root_of_unity(4, {2, -2}, 11);
    default: return AlgebraParams::root_of_unity(3, {3, 0, -3}, 11);
  }
}

Exec mode(int m) { return m == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) {
  state.SetLabel(instance(static_cast<int>(state.range(0))).describe() +
                 (state.range(1) == 0 ? " serial" : " parallel"));
}

void BM_RegularRep(benchmark::State& state) {
  const auto p = instance(static_cast<int>(state.range(0)));
  const TableauCatalog cat(p.n, p.level);
  const CoefficientSystem cs(SystemKind::alternating, p, cat);
  for (auto _ : state) {
    RegularRep rep(cs, mode(static_cast<int>(state.range(1))));
    benchmark::DoNotOptimize(rep.total_dim());
  }
  label(state);
}

void BM_AkBasis(benchmark::State& state) {
  const auto p = instance(static_cast<int>(state.range(0)));
  const auto inst = Instance::build(p, SystemKind::alternating, Exec::serial);
  for (auto _ : state) {
    auto b = ak_basis(inst->rep->generators(), p.level, inst->rep->dims(), mode(static_cast<int>(state.range(1))));
    benchmark::DoNotOptimize(b.data());
  }
  label(state);
}

void BM_Classify(benchmark::State& state) {
  const auto p = instance(static_cast<int>(state.range(0)));
  const auto inst = Instance::build(p, SystemKind::alternating, Exec::serial);
  for (auto _ : state) {
    auto c = classify(*inst, mode(static_cast<int>(state.range(1))));
    benchmark::DoNotOptimize(c.irreps.data());
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_RegularRep)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AkBasis)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
