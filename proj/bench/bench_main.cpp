#include <benchmark/benchmark.h>

#include "cluster/compat.hpp"
#include "cluster/explorer.hpp"
#include "cluster/rootsys.hpp"
#include "cluster/verify.hpp"

using namespace cluster;

namespace {

const ExchangeMatrix& d4() {
  static const ExchangeMatrix b = CartanData(IntMat{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}})
                                      .exchange_matrix();
  return b;
}

std::vector<VariableRef> d4_refs() {
  std::vector<VariableRef> refs;
  for (const auto& v : explore(d4()).variables) refs.push_back(v.ref);
  return refs;
}

void BM_DegreeTable(benchmark::State& state) {
  const auto refs = d4_refs();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? degree_table(d4(), refs) : degree_table_serial(d4(), refs));
}
BENCHMARK(BM_DegreeTable)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Explore(benchmark::State& state) {
  const ExchangeMatrix b = CartanData(IntMat{{2, -1, 0, 0, 0},
                                             {-1, 2, -1, 0, 0},
                                             {0, -1, 2, -1, 0},
                                             {0, 0, -1, 2, -1},
                                             {0, 0, 0, -1, 2}})
                               .exchange_matrix();
  ExploreOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(explore(b, opts));
}
BENCHMARK(BM_Explore)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_VerifyRandom(benchmark::State& state) {
  const Corpus corpus = builtin_corpus("random-200");
  VerifyOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite_on("sign-coherence", corpus, opts));
}
BENCHMARK(BM_VerifyRandom)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
