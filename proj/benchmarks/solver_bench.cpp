#include <benchmark/benchmark.h>

#include "ctcsim/corpus.hpp"
#include "ctcsim/dsl.hpp"
#include "ctcsim/interpreter.hpp"
#include "ctcsim/solver.hpp"

namespace {

using namespace ctcsim;

const char* const kIds[] = {"brun1", "brun2", "brun3"};

void BM_Parse(benchmark::State& state) {
  const auto& source = corpus::get(kIds[state.range(0)]).source;
  for (auto _ : state) benchmark::DoNotOptimize(parse(source));
}
BENCHMARK(BM_Parse)->DenseRange(0, 2);

void BM_RunSearch(benchmark::State& state) {
  const CompiledProgram compiled(corpus::program("brun1"));
  const Int n = state.range(0);
  const ReceivedAssignment received{{{"tt", -1}}};
  for (auto _ : state) benchmark::DoNotOptimize(compiled.run(n, received));
}
BENCHMARK(BM_RunSearch)->Arg(97)->Arg(9973)->Arg(1'000'003);

void BM_Solve(benchmark::State& state) {
  const Program p = corpus::program(kIds[state.range(0)]);
  const Int n = state.range(1);
  SolveOptions opts;
  opts.workers = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(solve(p, n, opts));
  state.SetItemsProcessed(state.iterations() * (n + 1) * (state.range(0) == 2 ? 3 : 1));
}
BENCHMARK(BM_Solve)
    ->ArgsProduct({{0, 1, 2}, {120, 997, 4096}, {1}})
    ->Args({2, 4096, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
