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

#include "phitsp/approx.h"

#include <algorithm>
#include <numeric>
#include <optional>

#include "phitsp/errors.h"
#include "phitsp/join.h"

namespace phitsp {
namespace {

void RequireConnected(const WeightedGraph& graph) {
  if (graph.num_vertices() > 0 && Components(graph).size() != 1) {
    throw InfeasibleError("graph is not connected");
  }
}

bool GroupsConnected(const WeightedGraph& graph, const EdgeMultiSet& f,
                     std::span<const VertexSet> groups) {
  std::vector<VertexSet> parts = Components(graph, f);
  for (const VertexSet& group : groups) {
    if (group.size() < 2) continue;
    bool inside = false;
    for (const VertexSet& part : parts) {
      if (group.IsSubsetOf(part)) inside = true;
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace

EdgeMultiSet ChristofidesTsp(const WeightedGraph& graph) {
  RequireConnected(graph);
  EdgeMultiSet tree = MinimumSpanningForest(graph);
  return tree + ShortestTJoin(graph, OddVertices(tree, graph)).join;
}

EdgeMultiSet ExactTsp(const WeightedGraph& graph) {
  RequireConnected(graph);
  const int n = graph.num_vertices();
  if (n > kMaxExactTspVertices) {
    throw SizeCapError("exact TSP limited to " +
                       std::to_string(kMaxExactTspVertices) + " vertices");
  }
  EdgeMultiSet best = EdgeMultiSet::Empty(graph);
  if (n <= 1) return best;

  std::vector<ShortestPaths> paths;
  for (int v = 0; v < n; ++v) paths.push_back(Dijkstra(graph, v));
  auto expand = [&](const std::vector<int>& order) {
    EdgeMultiSet tour = EdgeMultiSet::Empty(graph);
    for (int i = 0; i < n; ++i) {
      int from = order[i];
      int to = order[(i + 1) % n];
      for (int e : paths[from].PathTo(graph, to)) tour.Add(e);
    }
    return tour;
  };

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::optional<Rational> best_length;
  do {
    Rational length = 0;
    for (int i = 0; i < n; ++i) {
      length += *paths[order[i]].distance[order[(i + 1) % n]];
    }
    if (best_length && length > *best_length) continue;
    EdgeMultiSet tour = expand(order);
    if (!best_length || length < *best_length || tour < best) {
      best_length = length;
      best = std::move(tour);
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

EdgeMultiSet SteinerForest(const WeightedGraph& graph,
                           std::span<const VertexSet> groups) {
  const int n = graph.num_vertices();
  std::vector<VertexSet> components = Components(graph);
  for (const VertexSet& group : groups) {
    if (!group.IsSubsetOf(graph.vertices())) {
      throw PreconditionError("group " + group.ToString() +
                              " has vertices outside the graph");
    }
    bool inside = group.empty();
    for (const VertexSet& part : components) {
      if (group.IsSubsetOf(part)) inside = true;
    }
    if (!inside) {
      throw InfeasibleError("group " + group.ToString() +
                            " spans several components");
    }
  }

  std::vector<VertexSet> moat(n);
  std::vector<int> moat_of(n);
  for (int v = 0; v < n; ++v) {
    moat[v] = VertexSet::Singleton(v);
    moat_of[v] = v;
  }
  auto active = [&](int id) {
    for (const VertexSet& group : groups) {
      if (group.Intersects(moat[id]) && !group.IsSubsetOf(moat[id])) {
        return true;
      }
    }
    return false;
  };

  std::vector<Rational> radius(n, Rational(0));
  std::vector<int> added;
  while (true) {
    std::vector<bool> is_active(n, false);
    bool any = false;
    for (int v = 0; v < n; ++v) {
      if (moat_of[v] == v && active(v)) {
        is_active[v] = true;
        any = true;
      }
    }
    if (!any) break;

    int chosen = -1;
    Rational chosen_time;
    for (int e = 0; e < graph.num_edges(); ++e) {
      const Edge& edge = graph.edge(e);
      int a = moat_of[edge.u];
      int b = moat_of[edge.v];
      if (a == b) continue;
      int rate = (is_active[a] ? 1 : 0) + (is_active[b] ? 1 : 0);
      if (rate == 0) continue;
      Rational time = (edge.length - radius[edge.u] - radius[edge.v]) / rate;
      if (chosen == -1 || time < chosen_time) {
        chosen = e;
        chosen_time = time;
      }
    }
    if (chosen == -1) throw InfeasibleError("active moat cannot grow");

    for (int v = 0; v < n; ++v) {
      if (is_active[moat_of[v]]) radius[v] += chosen_time;
    }
    const Edge& edge = graph.edge(chosen);
    int keep = std::min(moat_of[edge.u], moat_of[edge.v]);
    int gone = std::max(moat_of[edge.u], moat_of[edge.v]);
    moat[keep] |= moat[gone];
    moat[gone] = VertexSet();
    for (int v : moat[keep]) moat_of[v] = keep;
    added.push_back(chosen);
  }

  EdgeMultiSet forest = EdgeMultiSet::FromEdges(graph.num_edges(), added);
  for (auto it = added.rbegin(); it != added.rend(); ++it) {
    forest.Set(*it, 0);
    if (!GroupsConnected(graph, forest, groups)) forest.Set(*it, 1);
  }
  return forest;
}

SevenApproxParts SevenApproxPhiParts(const PhiInstance& inst) {
  Feasibility feasibility = CheckFeasibility(inst);
  if (!feasibility.feasible) throw InfeasibleError(feasibility.Describe());
  const WeightedGraph& graph = inst.graph;

  SevenApproxParts parts;
  parts.join = ShortestTJoin(graph, inst.phi.odd_targets()).join;

  Quotient quotient = Contract(graph, inst.phi.interface_vertices());
  EdgeMultiSet local_tree = MinimumSpanningForest(quotient.graph);
  parts.contracted_tree = EdgeMultiSet::Empty(graph);
  for (int e = 0; e < quotient.graph.num_edges(); ++e) {
    if (local_tree.count(e) > 0) parts.contracted_tree.Add(quotient.edge_origin[e]);
  }

  parts.forest = SteinerForest(graph, inst.phi.parts());
  parts.tour = parts.join + parts.contracted_tree + parts.contracted_tree +
               parts.forest + parts.forest;
  return parts;
}

EdgeMultiSet SevenApproxPhi(const PhiInstance& inst) {
  return SevenApproxPhiParts(inst).tour;
}

}  // namespace phitsp
