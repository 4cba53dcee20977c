#include <benchmark/benchmark.h>

#include "twocat/benabou.hpp"
#include "twocat/homology.hpp"
#include "twocat/integration.hpp"
#include "twocat/nerve.hpp"

using namespace twocat;

static void BM_ValidatePresentation(benchmark::State& state) {
  auto a = product(*ordinal(static_cast<int>(state.range(0))), *cyclic_group_cat(2));
  for (auto _ : state) benchmark::DoNotOptimize(validate(*a).ok());
}
BENCHMARK(BM_ValidatePresentation)->Arg(1)->Arg(2)->Arg(3);

static void BM_NerveEnumeration(benchmark::State& state) {
  auto g = cyclic_group_cat(2);
  int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto n = nerve(g, NerveVariant::LaxNor, dim);
    benchmark::DoNotOptimize(n.sset.count(dim));
  }
}
BENCHMARK(BM_NerveEnumeration)->Arg(3)->Arg(4)->Arg(5);

static void BM_SmithNormalForm(benchmark::State& state) {
  auto n = nerve(cyclic_group_cat(static_cast<int>(state.range(0))), NerveVariant::LaxNor, 4);
  for (auto _ : state) {
    auto h = homology(n.sset, 2);
    benchmark::DoNotOptimize(h.groups[2].torsion.size());
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(3);

static void BM_CommaConstruction(benchmark::State& state) {
  auto a = ordinal(static_cast<int>(state.range(0)));
  auto id = identity_functor(a);
  LaxFunctor idc = id;
  idc.dir = Direction::Colax;
  for (auto _ : state) {
    auto c = comma(id, idc);
    benchmark::DoNotOptimize(c.comma->n_two());
  }
}
BENCHMARK(BM_CommaConstruction)->Arg(1)->Arg(2)->Arg(3);

static void BM_CylinderS1(benchmark::State& state) {
  auto a = state.range(0) == 0 ? TwoCatPtr(walking_two_cell()) : cyclic_group_cat(3);
  for (auto _ : state) {
    auto c = cylinder_s1(a);
    benchmark::DoNotOptimize(c.cyl->n_two());
  }
}
BENCHMARK(BM_CylinderS1)->Arg(0)->Arg(1);

static void BM_Strictification(benchmark::State& state) {
  auto a = ordinal(1);
  auto b = cyclic_group_cat(2);
  for (auto _ : state) {
    auto r = strictification_bijection_check(a, b, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r.functor_count);
  }
}
BENCHMARK(BM_Strictification)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
