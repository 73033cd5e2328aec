#include <benchmark/benchmark.h>

#include <string>

#include "flowgraph/dataflow.h"
#include "flowgraph/frontend.h"
#include "flowgraph/paths.h"

namespace {

// `n` sequential ifs over a handful of variables: 2^n static paths.
std::string sequential_ifs(int n) {
  std::string body = "int a = 1; int b = 2;";
  for (int i = 0; i < n; ++i) {
    body += " if (a > " + std::to_string(i) + ") a = a + b; else b = b - a;";
  }
  return "class Bench { public static void main(String[] args) {" + body + " } }";
}

// Nested loops with reassignments, stressing the dataflow fixpoint.
std::string loopy(int n) {
  std::string body = "int a = 0; int b = 1;";
  for (int i = 0; i < n; ++i) {
    body += " int c" + std::to_string(i) + " = " + std::to_string(i) + ";";
    body += " while (a < " + std::to_string(i) + ") { a = a + b; b = b * 2; c" +
            std::to_string(i) + " = a; }";
  }
  return "class Bench { public static void main(String[] args) {" + body + " } }";
}

void BM_Parse(benchmark::State& state) {
  std::string src = sequential_ifs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flowgraph::load_program(src));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(src.size()));
}
BENCHMARK(BM_Parse)->Arg(10)->Arg(100)->Arg(1000);

void BM_StaticPaths(benchmark::State& state) {
  auto program = flowgraph::load_program(sequential_ifs(static_cast<int>(state.range(0))));
  auto cfg = flowgraph::build_cfg(program);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flowgraph::enumerate_static_paths(cfg, 2, 1u << 20));
  }
}
BENCHMARK(BM_StaticPaths)->DenseRange(4, 12, 4);

void BM_ReachingDefinitions(benchmark::State& state) {
  auto program = flowgraph::load_program(loopy(static_cast<int>(state.range(0))));
  auto cfg = flowgraph::build_cfg(program);
  auto du = flowgraph::defs_uses(program);
  for (auto _ : state) benchmark::DoNotOptimize(flowgraph::reaching_definitions(cfg, du));
}
BENCHMARK(BM_ReachingDefinitions)->Arg(10)->Arg(100)->Arg(400);

}  // namespace
BENCHMARK_MAIN();
