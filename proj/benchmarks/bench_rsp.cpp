#include <benchmark/benchmark.h>

#include <random>

#include "rspbc/classical.hpp"
#include "rspbc/generators.hpp"
#include "rspbc/linalg.hpp"
#include "rspbc/rsp_net.hpp"
#include "rspbc/rsp_simple.hpp"

namespace {

using namespace rspbc;

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Connected G(n, p)-style graph with unit weights and random costs.
Graph dense_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  GraphBuilder b(true);
  for (int i = 0; i < n; ++i) b.ensure_node(std::to_string(i + 1));
  std::vector<bool> present(static_cast<size_t>(n) * static_cast<size_t>(n),
                            false);
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    const size_t key = static_cast<size_t>(u) * static_cast<size_t>(n) +
                       static_cast<size_t>(v);
    if (present[key]) return;
    present[key] = true;
    b.add_edge(std::to_string(u + 1), std::to_string(v + 1), 1.0,
               0.5 + uniform01(rng));
  };
  for (int i = 1; i < n; ++i) add(static_cast<int>(uniform01(rng) * i), i);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i - 1; ++j) {
      if (uniform01(rng) < p) add(i, j);
    }
  }
  return b.build();
}

void FundamentalMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = dense_graph(n, 0.5, 7);
  const TransitionModel t =
      reference_transitions(g, TransitionPolicy::kWeightProportional);
  for (auto _ : state) {
    const KilledWalkMatrix w = killed_transition_matrix(g, t, 1.0);
    benchmark::DoNotOptimize(fundamental_matrix(w));
  }
  state.SetComplexityN(n);
}
BENCHMARK(FundamentalMatrix)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void SimpleBetweennessBatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = dense_graph(n, 0.5, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rsp_betweenness(g, TransitionPolicy::kWeightProportional, 1.0));
  }
  state.SetComplexityN(n);
}
BENCHMARK(SimpleBetweennessBatch)
    ->RangeMultiplier(2)
    ->Range(64, 1024)
    ->Complexity();

// Edge-loop scaling at fixed n: the density knob sweeps m.
void NetBetweennessEdgeLoop(benchmark::State& state) {
  const int n = 192;
  const double density = static_cast<double>(state.range(0)) / 100.0;
  const Graph g = dense_graph(n, density, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rsp_net_betweenness(g, TransitionPolicy::kWeightProportional, 1.0));
  }
  state.counters["edges"] =
      static_cast<double>(g.undirected_edges().size());
}
BENCHMARK(NetBetweennessEdgeLoop)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

void CurrentFlowOnePass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = dense_graph(n, 0.3, 31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(current_flow_betweenness(g));
  }
  state.SetComplexityN(n);
}
BENCHMARK(CurrentFlowOnePass)->RangeMultiplier(2)->Range(64, 512)->Complexity();

}  // namespace

BENCHMARK_MAIN();
