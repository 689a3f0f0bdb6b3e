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

#include "support/brute_force.h"

#include <algorithm>
#include <functional>
#include <numeric>

namespace phitsp::testing {
namespace {

struct Dsu {
  explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int Root(int x) { return up[x] == x ? x : up[x] = Root(up[x]); }
  void Join(int a, int b) { up[Root(a)] = Root(b); }
  std::vector<int> up;
};

Dsu ComponentsOf(const WeightedGraph& graph, const EdgeMultiSet& f) {
  Dsu dsu(graph.num_vertices());
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (f.count(e) > 0) dsu.Join(graph.edge(e).u, graph.edge(e).v);
  }
  return dsu;
}

// Calls visit on every vector in {0..max}^m, last edge fastest.
void ForEachVector(int m, int max, const std::function<void(const EdgeMultiSet&)>& visit) {
  EdgeMultiSet f(m);
  std::function<void(int)> rec = [&](int e) {
    if (e == m) {
      visit(f);
      return;
    }
    for (int c = 0; c <= max; ++c) {
      f.Set(e, c);
      rec(e + 1);
    }
    f.Set(e, 0);
  };
  rec(0);
}

bool GroupsConnected(const WeightedGraph& graph, const EdgeMultiSet& f,
                     std::span<const VertexSet> groups) {
  Dsu dsu = ComponentsOf(graph, f);
  for (const VertexSet& group : groups) {
    for (int v : group) {
      if (dsu.Root(v) != dsu.Root(group.min())) return false;
    }
  }
  return true;
}

}  // namespace

bool NaiveIsPhiTour(const WeightedGraph& graph, const EdgeMultiSet& f,
                    const Interface& phi) {
  const int n = graph.num_vertices();
  std::vector<int> degree(n, 0);
  for (int e = 0; e < graph.num_edges(); ++e) {
    degree[graph.edge(e).u] += f.count(e);
    degree[graph.edge(e).v] += f.count(e);
  }
  for (int v = 0; v < n; ++v) {
    if ((degree[v] % 2 == 1) != phi.odd_targets().contains(v)) return false;
  }
  Dsu dsu = ComponentsOf(graph, f);
  // Every component must touch I, unless there is a single component.
  std::vector<bool> is_root_with_interface(n, false);
  for (int v : phi.interface_vertices()) is_root_with_interface[dsu.Root(v)] = true;
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    if (dsu.Root(v) != v) continue;
    ++roots;
  }
  if (roots > 1) {
    for (int v = 0; v < n; ++v) {
      if (dsu.Root(v) == v && !is_root_with_interface[v]) return false;
    }
  }
  return GroupsConnected(graph, f, phi.parts());
}

std::optional<Rational> NaivePhiOptimum(const WeightedGraph& graph,
                                        const Interface& phi, int max_mult) {
  std::optional<Rational> best;
  ForEachVector(graph.num_edges(), max_mult, [&](const EdgeMultiSet& f) {
    if (!NaiveIsPhiTour(graph, f, phi)) return;
    Rational length = f.Length(graph);
    if (!best || length < *best) best = length;
  });
  return best;
}

std::optional<Rational> NaiveMatchingCost(const CostMatrix& cost) {
  const int k = static_cast<int>(cost.size());
  std::vector<bool> used(k, false);
  std::optional<Rational> best;
  std::function<void(Rational)> rec = [&](Rational acc) {
    int first = 0;
    while (first < k && used[first]) ++first;
    if (first == k) {
      if (!best || acc < *best) best = acc;
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < k; ++j) {
      if (used[j] || !cost[first][j]) continue;
      used[j] = true;
      rec(acc + *cost[first][j]);
      used[j] = false;
    }
    used[first] = false;
  };
  rec(0);
  return best;
}

Rational NaiveSpanningForestLength(const WeightedGraph& graph) {
  const int m = graph.num_edges();
  EdgeMultiSet everything(m);
  for (int e = 0; e < m; ++e) everything.Set(e, 1);
  Dsu all = ComponentsOf(graph, everything);
  int components = 0;
  for (int v = 0; v < graph.num_vertices(); ++v) components += all.Root(v) == v;
  const int needed = graph.num_vertices() - components;
  std::optional<Rational> best;
  ForEachVector(m, 1, [&](const EdgeMultiSet& f) {
    if (f.size() != needed) return;
    Dsu dsu(graph.num_vertices());
    for (int e = 0; e < m; ++e) {
      if (!f.count(e)) continue;
      if (dsu.Root(graph.edge(e).u) == dsu.Root(graph.edge(e).v)) return;
      dsu.Join(graph.edge(e).u, graph.edge(e).v);
    }
    Rational length = f.Length(graph);
    if (!best || length < *best) best = length;
  });
  return *best;
}

std::optional<Rational> NaiveShortestTJoin(const WeightedGraph& graph,
                                           const VertexSet& targets) {
  std::optional<Rational> best;
  ForEachVector(graph.num_edges(), 1, [&](const EdgeMultiSet& f) {
    std::vector<int> degree(graph.num_vertices(), 0);
    for (int e = 0; e < graph.num_edges(); ++e) {
      degree[graph.edge(e).u] += f.count(e);
      degree[graph.edge(e).v] += f.count(e);
    }
    for (int v = 0; v < graph.num_vertices(); ++v) {
      if ((degree[v] % 2 == 1) != targets.contains(v)) return;
    }
    Rational length = f.Length(graph);
    if (!best || length < *best) best = length;
  });
  return best;
}

std::optional<Rational> NaiveSteinerForest(const WeightedGraph& graph,
                                           std::span<const VertexSet> groups) {
  std::optional<Rational> best;
  ForEachVector(graph.num_edges(), 1, [&](const EdgeMultiSet& f) {
    if (!GroupsConnected(graph, f, groups)) return;
    Rational length = f.Length(graph);
    if (!best || length < *best) best = length;
  });
  return best;
}

Rational ClosureTspLength(const WeightedGraph& graph) {
  const int n = graph.num_vertices();
  if (n <= 1) return 0;
  std::vector<std::vector<std::optional<Rational>>> d(
      n, std::vector<std::optional<Rational>>(n));
  for (int v = 0; v < n; ++v) d[v][v] = Rational(0);
  for (const Edge& e : graph.edges()) {
    d[e.u][e.v] = e.length;
    d[e.v][e.u] = e.length;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] && d[k][j] && (!d[i][j] || *d[i][k] + *d[k][j] < *d[i][j])) {
          d[i][j] = *d[i][k] + *d[k][j];
        }
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::optional<Rational> best;
  do {
    Rational length = 0;
    for (int i = 0; i < n; ++i) length += *d[order[i]][order[(i + 1) % n]];
    if (!best || length < *best) best = length;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return *best;
}

Interface NaiveInducedInterface(const WeightedGraph& graph, const EdgeMultiSet& f,
                                const Interface& phi, const VertexSet& subset) {
  VertexSet interface_vertices = phi.interface_vertices() & subset;
  std::vector<int> degree(graph.num_vertices(), 0);
  EdgeMultiSet inside(graph.num_edges());
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    if (f.count(e) == 0) continue;
    bool has_u = subset.contains(edge.u);
    bool has_v = subset.contains(edge.v);
    if (has_u && has_v) {
      degree[edge.u] += f.count(e);
      degree[edge.v] += f.count(e);
      inside.Set(e, f.count(e));
    } else if (has_u) {
      interface_vertices.insert(edge.u);
    } else if (has_v) {
      interface_vertices.insert(edge.v);
    }
  }
  VertexSet targets;
  for (int v : subset) {
    if (degree[v] % 2 == 1) targets.insert(v);
  }
  Dsu dsu = ComponentsOf(graph, inside);
  std::vector<VertexSet> parts;
  for (int v : interface_vertices) {
    bool placed = false;
    for (VertexSet& part : parts) {
      if (dsu.Root(part.min()) == dsu.Root(v)) {
        part.insert(v);
        placed = true;
      }
    }
    if (!placed) parts.push_back(VertexSet::Singleton(v));
  }
  return Interface(interface_vertices, targets, std::move(parts));
}

}  // namespace phitsp::testing
