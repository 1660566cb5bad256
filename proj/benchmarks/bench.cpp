#include <benchmark/benchmark.h>

#include "arrlcs/braid.hpp"
#include "arrlcs/nilq.hpp"
#include "arrlcs/report.hpp"

using namespace arrlcs;

static void BM_lattice(benchmark::State& state) {
  Arrangement a = builtin_arrangement("A+");
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(a));
}
BENCHMARK(BM_lattice);

static void BM_wiring(benchmark::State& state) {
  Arrangement a = builtin_arrangement("A+");
  for (auto _ : state) benchmark::DoNotOptimize(build_wiring(a));
}
BENCHMARK(BM_wiring);

static void BM_randell(benchmark::State& state) {
  WiringDiagram d = build_wiring(builtin_arrangement("A+"));
  for (auto _ : state) benchmark::DoNotOptimize(randell_presentation(d));
}
BENCHMARK(BM_randell);

static void BM_braid_monodromy(benchmark::State& state) {
  WiringDiagram d = build_wiring(builtin_arrangement("A+"));
  for (auto _ : state) benchmark::DoNotOptimize(braid_monodromy(d));
}
BENCHMARK(BM_braid_monodromy);

static void BM_zvk(benchmark::State& state) {
  WiringDiagram d = build_wiring(builtin_arrangement("A+"));
  MonodromyTuple t = braid_monodromy(d);
  for (auto _ : state) benchmark::DoNotOptimize(zvk_presentation(t));
}
BENCHMARK(BM_zvk);

static void BM_nq(benchmark::State& state) {
  FinitePresentation p = randell_presentation(build_wiring(builtin_arrangement("A+")));
  int cls = (int)state.range(0);
  NqOptions opt;
  opt.check_consistency = false;  // time the construction, not the audit
  for (auto _ : state) benchmark::DoNotOptimize(nilpotent_quotient(p, cls, opt));
}
BENCHMARK(BM_nq)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_snf(benchmark::State& state) {
  FinitePresentation p = randell_presentation(build_wiring(builtin_arrangement("A+")));
  IntMat m = abelianization_matrix(p);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_snf);

static void BM_collect(benchmark::State& state) {
  // collection stress: normal form of a long alternating word in F2 class 5
  FinitePresentation f2;
  f2.ngens = 2;
  f2.display = {1, 2};
  NqResult r = nilpotent_quotient(f2, 5);
  Collector col(r.pc);
  for (auto _ : state) {
    std::map<int, Int> st;
    for (int i = 0; i < 40; ++i) {
      col.mul_gen(st, 1 + (i % 2), (i % 3) - 1 ? 2 : -3);
    }
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(BM_collect);

BENCHMARK_MAIN();
