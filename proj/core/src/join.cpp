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

#include "phitsp/join.h"

#include <algorithm>
#include <cstdint>
#include <deque>

#include "phitsp/errors.h"

namespace phitsp {

Matching MinWeightPerfectMatching(const CostMatrix& cost) {
  const int k = static_cast<int>(cost.size());
  if (k % 2 != 0) throw PreconditionError("odd number of matching points");
  if (k > kMaxMatchingPoints) {
    throw SizeCapError("matching on " + std::to_string(k) +
                       " points exceeds the cap of " +
                       std::to_string(kMaxMatchingPoints));
  }
  Matching out;
  out.cost = 0;
  if (k == 0) return out;

  // best[mask]: cheapest way to match the points in mask, where masks are
  // grown by always pairing the lowest unmatched point.
  const uint32_t full = (uint32_t{1} << k) - 1;
  std::vector<std::optional<Rational>> best(full + 1);
  std::vector<int8_t> partner(full + 1, -1);
  best[0] = Rational(0);
  // remaining-set formulation: value(mask) for mask of unmatched points.
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    int low = std::countr_zero(mask);
    for (int j = low + 1; j < k; ++j) {
      if (!((mask >> j) & 1u)) continue;
      if (!cost[low][j]) continue;
      uint32_t rest = mask & ~(uint32_t{1} << low) & ~(uint32_t{1} << j);
      if (!best[rest]) continue;
      Rational candidate = *best[rest] + *cost[low][j];
      if (!best[mask] || candidate < *best[mask]) {
        best[mask] = candidate;
        partner[mask] = static_cast<int8_t>(j);
      }
    }
  }
  if (!best[full]) {
    throw NoMatchingError("no perfect matching with finite cost");
  }
  out.cost = *best[full];
  for (uint32_t mask = full; mask != 0;) {
    int low = std::countr_zero(mask);
    int j = partner[mask];
    out.pairs.emplace_back(low, j);
    mask &= ~(uint32_t{1} << low) & ~(uint32_t{1} << j);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

JoinResult ShortestTJoin(const WeightedGraph& graph, const VertexSet& targets) {
  if (!targets.IsSubsetOf(graph.vertices())) {
    throw PreconditionError("T outside the graph");
  }
  for (const VertexSet& comp : Components(graph)) {
    if ((comp & targets).size() % 2 != 0) {
      throw NoTJoinError("component " + comp.ToString() +
                         " holds an odd number of T-vertices");
    }
  }
  JoinResult out{EdgeMultiSet::Empty(graph), Rational(0)};
  std::vector<int> points = targets.members();
  if (points.empty()) return out;

  std::vector<ShortestPaths> trees;
  trees.reserve(points.size());
  for (int p : points) trees.push_back(Dijkstra(graph, p));
  CostMatrix cost(points.size(),
                  std::vector<std::optional<Rational>>(points.size()));
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = 0; j < points.size(); ++j) {
      if (i != j) cost[i][j] = trees[i].distance[points[j]];
    }
  }
  Matching matching = MinWeightPerfectMatching(cost);
  std::vector<int> parity(graph.num_edges(), 0);
  for (auto [i, j] : matching.pairs) {
    for (int id : trees[i].PathTo(graph, points[j])) parity[id] ^= 1;
  }
  for (int id = 0; id < graph.num_edges(); ++id) {
    if (parity[id]) out.join.Add(id);
  }
  out.length = out.join.Length(graph);
  return out;
}

EdgeMultiSet ExtractTJoinWithin(const EdgeMultiSet& f,
                                const VertexSet& targets,
                                const WeightedGraph& graph) {
  CheckMultiSet(f, graph);
  for (const VertexSet& comp : Components(graph, f)) {
    if ((comp & targets).size() % 2 != 0) {
      throw NoTJoinError("component " + comp.ToString() + " of (V,F)" +
                         " holds an odd number of T-vertices");
    }
  }
  const int n = graph.num_vertices();
  std::vector<int> parent_edge(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<int> order;  // BFS order; reversed it is a post-order
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const auto& inc : graph.incident(v)) {
        if (f.count(inc.edge) == 0 || seen[inc.neighbor]) continue;
        seen[inc.neighbor] = true;
        parent_edge[inc.neighbor] = inc.edge;
        queue.push_back(inc.neighbor);
      }
    }
  }
  std::vector<int> odd(n, 0);
  for (int v : targets) odd[v] = 1;
  EdgeMultiSet join = EdgeMultiSet::Empty(graph);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (parent_edge[v] < 0 || !odd[v]) continue;
    join.Add(parent_edge[v]);
    odd[graph.edge(parent_edge[v]).other(v)] ^= 1;
  }
  return join;
}

}  // namespace phitsp
