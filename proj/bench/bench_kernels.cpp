// Serial reference path against the OpenMP kernels on the twisted Fock module.
// Arg(0) is serial, Arg(n > 0) is parallel with n threads.

#include <benchmark/benchmark.h>

#include "vafilt/filtration/engine.hpp"
#include "vafilt/graded/gr_structures.hpp"
#include "vafilt/module/fock_module.hpp"
#include "vafilt/module/mode_grid.hpp"
#include "vafilt/va/heisenberg.hpp"

using namespace vafilt;

namespace {

ExecConfig exec_for(long arg) {
  return arg == 0 ? ExecConfig{Execution::Serial, 1} : ExecConfig{Execution::Parallel, static_cast<int>(arg)};
}

void BM_FiltrationFamilies(benchmark::State& state) {
  Heisenberg va(2, 8);
  FockModule mod(va, 44);
  for (auto _ : state) {
    FiltrationEngine eng(va, &mod, 5, 11, exec_for(state.range(0)));
    for (long n = 0; n <= 6; ++n) benchmark::DoNotOptimize(eng.E_W(n).total_dim());
    for (long n = 2; n <= 5; ++n) benchmark::DoNotOptimize(eng.C_W(n).total_dim());
  }
}

void BM_ModeGrid(benchmark::State& state) {
  Heisenberg va(2, 8);
  FockModule mod(va, 44);
  GridOptions o;
  o.uv_weight = 2;
  o.w_ticks = 4;
  o.mode_range = 2;
  for (auto _ : state) benchmark::DoNotOptimize(check_mode_grid(mod, o, exec_for(state.range(0))));
}

void BM_GradedAxioms(benchmark::State& state) {
  Heisenberg va(2, 8);
  FockModule mod(va, 44);
  FiltrationEngine eng(va, &mod, 3, 7, exec_for(state.range(0)));
  GradedContext ctx(eng);
  GrOptions o;
  o.v_weight = 3;
  o.w_ticks = 7;
  for (auto _ : state) benchmark::DoNotOptimize(check_twisted_vpa_module_axioms(ctx, o));
}

}  // namespace

BENCHMARK(BM_FiltrationFamilies)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModeGrid)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GradedAxioms)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
