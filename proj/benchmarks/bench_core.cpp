#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "fuzzgraph/closed_form.hpp"
#include "fuzzgraph/connectivity.hpp"
#include "fuzzgraph/graph.hpp"
#include "fuzzgraph/indices.hpp"
#include "fuzzgraph/oracle.hpp"
#include "fuzzgraph/structures.hpp"

namespace {

// Random connected graph with sigma = 1: spanning tree plus extra pairs
// with probability extra_p.
fuzzgraph::FuzzyGraph random_graph(int n, double extra_p,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> membership(0.05, 1.0);
  std::uniform_real_distribution<double> chance(0.0, 1.0);
  std::vector<std::string> names;
  std::vector<fuzzgraph::VertexSpec> vs;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    vs.push_back({names[i], 1.0});
  }
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<fuzzgraph::EdgeSpec> es;
  const auto add = [&](int i, int j) {
    present[i][j] = present[j][i] = true;
    es.push_back({names[i], names[j], membership(rng)});
  };
  for (int i = 1; i < n; ++i) {
    add(static_cast<int>(rng() % static_cast<std::uint64_t>(i)), i);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!present[i][j] && chance(rng) < extra_p) add(i, j);
    }
  }
  return fuzzgraph::FuzzyGraph::build(vs, es);
}

void BM_StrengthMatrix(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.2, 99);
  for (auto _ : state) {
    auto m = fuzzgraph::strength_matrix(g);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_StrengthMatrix)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ClassifyEdges(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.2, 7);
  for (auto _ : state) {
    auto labels = fuzzgraph::classify_edges(g);
    benchmark::DoNotOptimize(labels);
  }
}
BENCHMARK(BM_ClassifyEdges)->Arg(8)->Arg(16)->Arg(32);

void BM_IndexReport(benchmark::State& state) {
  const auto g = fuzzgraph::generate_saturated_cycle(
      fuzzgraph::CycleSpec(static_cast<int>(state.range(0)), 0.8, 0.5));
  for (auto _ : state) {
    auto report = fuzzgraph::index_report(g);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_IndexReport)->Arg(8)->Arg(16)->Arg(32);

void BM_MaximumSpanningTree(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 23);
  for (auto _ : state) {
    auto tree = fuzzgraph::maximum_spanning_tree(g);
    benchmark::DoNotOptimize(tree);
  }
}
BENCHMARK(BM_MaximumSpanningTree)->Arg(16)->Arg(64);

void BM_OracleReport(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 51);
  for (auto _ : state) {
    auto report = fuzzgraph::oracle::oracle_report(g);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_OracleReport)->Arg(6)->Arg(8);

void BM_OracleCycleSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g =
      fuzzgraph::generate_saturated_cycle(fuzzgraph::CycleSpec(n, 0.8, 0.5));
  for (auto _ : state) {
    auto report = fuzzgraph::oracle::oracle_report(g, n);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_OracleCycleSweep)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
