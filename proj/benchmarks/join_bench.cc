// Copyright 2026 The phitsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "phitsp/join.h"
#include "phitsp/laminar.h"

namespace phitsp {
namespace {

WeightedGraph RandomComplete(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, 100);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Rational(length(rng))});
  }
  return WeightedGraph(n, std::move(edges));
}

void BM_PerfectMatching(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  WeightedGraph g = RandomComplete(k, 7);
  CostMatrix cost(k, std::vector<std::optional<Rational>>(k));
  for (const Edge& e : g.edges()) cost[e.u][e.v] = cost[e.v][e.u] = e.length;
  for (auto _ : state) benchmark::DoNotOptimize(MinWeightPerfectMatching(cost));
}
BENCHMARK(BM_PerfectMatching)->DenseRange(4, 16, 4);

void BM_ShortestTJoin(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  WeightedGraph g = RandomComplete(n, 11);
  VertexSet targets = VertexSet::Range(n);
  if (n % 2 == 1) targets.erase(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(ShortestTJoin(g, targets));
}
BENCHMARK(BM_ShortestTJoin)->DenseRange(4, 16, 4);

void BM_LaminarFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  WeightedGraph g = RandomComplete(n, 13);
  VertexSet targets{0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(BuildLaminarFamily(g, targets));
}
BENCHMARK(BM_LaminarFamily)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace phitsp
