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

#include "phitsp/graph.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "phitsp/errors.h"

namespace phitsp {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::FromMembers(std::span<const int> members) {
  VertexSet set;
  for (int v : members) set.insert(v);
  return set;
}

VertexSet VertexSet::Range(int n) {
  if (n >= 64) return FromBits(~uint64_t{0});
  return FromBits((uint64_t{1} << n) - 1);
}

VertexSet VertexSet::Singleton(int v) { return FromBits(uint64_t{1} << v); }

std::vector<int> VertexSet::members() const {
  return std::vector<int>(begin(), end());
}

std::string VertexSet::ToString() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : *this) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph::WeightedGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 0 || num_vertices > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(num_vertices) +
                            " outside [0, " + std::to_string(kMaxVertices) +
                            "]");
  }
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw PreconditionError("loop at vertex " + std::to_string(e.u));
    }
    if (e.length < 0) throw PreconditionError("negative edge length");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw PreconditionError("parallel edge " + std::to_string(edges_[i].u) +
                              "-" + std::to_string(edges_[i].v));
    }
  }
  adjacency_.assign(num_vertices_, {});
  for (int id = 0; id < num_edges(); ++id) {
    adjacency_[edges_[id].u].push_back({edges_[id].v, id});
    adjacency_[edges_[id].v].push_back({edges_[id].u, id});
  }
}

std::optional<int> WeightedGraph::FindEdge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair(u, v),
      [](const Edge& e, const std::pair<int, int>& key) {
        return std::pair(e.u, e.v) < key;
      });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> WeightedGraph::Cut(const VertexSet& set) const {
  std::vector<int> out;
  for (int id = 0; id < num_edges(); ++id) {
    if (edges_[id].crosses(set)) out.push_back(id);
  }
  return out;
}

std::vector<int> WeightedGraph::EdgesInside(const VertexSet& set) const {
  std::vector<int> out;
  for (int id = 0; id < num_edges(); ++id) {
    if (edges_[id].inside(set)) out.push_back(id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// EdgeMultiSet

EdgeMultiSet EdgeMultiSet::FromPairs(
    int num_edges, std::span<const std::pair<int, int>> entries) {
  EdgeMultiSet out(num_edges);
  for (auto [id, times] : entries) out.Add(id, times);
  return out;
}

EdgeMultiSet EdgeMultiSet::FromEdges(int num_edges, std::span<const int> ids) {
  EdgeMultiSet out(num_edges);
  for (int id : ids) out.Add(id);
  return out;
}

void EdgeMultiSet::Add(int id, int times) {
  if (id < 0 || id >= num_edges()) {
    throw MalformedMultisetError("edge id " + std::to_string(id) +
                                 " out of range");
  }
  if (counts_[id] + times < 0) {
    throw MalformedMultisetError("negative multiplicity for edge " +
                                 std::to_string(id));
  }
  counts_[id] += times;
}

void EdgeMultiSet::Set(int id, int times) {
  if (id < 0 || id >= num_edges() || times < 0) {
    throw MalformedMultisetError("invalid entry for edge " +
                                 std::to_string(id));
  }
  counts_[id] = times;
}

EdgeMultiSet& EdgeMultiSet::operator+=(const EdgeMultiSet& other) {
  if (other.num_edges() != num_edges()) {
    throw MalformedMultisetError("multi-union of multisets of different graphs");
  }
  for (int id = 0; id < num_edges(); ++id) counts_[id] += other.counts_[id];
  return *this;
}

bool EdgeMultiSet::empty() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](int c) { return c == 0; });
}

int EdgeMultiSet::size() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::vector<int> EdgeMultiSet::Support() const {
  std::vector<int> out;
  for (int id = 0; id < num_edges(); ++id) {
    if (counts_[id] > 0) out.push_back(id);
  }
  return out;
}

Rational EdgeMultiSet::Length(const WeightedGraph& graph) const {
  CheckMultiSet(*this, graph);
  Rational total = 0;
  for (int id = 0; id < num_edges(); ++id) {
    if (counts_[id] != 0) total += counts_[id] * graph.edge(id).length;
  }
  return total;
}

void CheckMultiSet(const EdgeMultiSet& f, const WeightedGraph& graph) {
  if (f.num_edges() != graph.num_edges()) {
    throw MalformedMultisetError(
        "multiset over " + std::to_string(f.num_edges()) +
        " edge ids used with a graph of " + std::to_string(graph.num_edges()) +
        " edges");
  }
}

VertexSet OddVertices(const EdgeMultiSet& f, const WeightedGraph& graph) {
  CheckMultiSet(f, graph);
  VertexSet odd;
  for (int id = 0; id < f.num_edges(); ++id) {
    if (f.count(id) % 2 != 0) {
      const Edge& e = graph.edge(id);
      odd ^= VertexSet::Singleton(e.u);
      odd ^= VertexSet::Singleton(e.v);
    }
  }
  return odd;
}

// ---------------------------------------------------------------------------
// Contraction, induced subgraphs

Quotient Contract(const WeightedGraph& graph, const VertexSet& merged) {
  const int n = graph.num_vertices();
  Quotient q;
  q.vertex_map.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (q.vertex_map[v] != -1) continue;
    if (merged.contains(v)) {
      for (int w : merged) q.vertex_map[w] = next;
    } else {
      q.vertex_map[v] = next;
    }
    ++next;
  }

  // Shortest representative per quotient pair.
  std::vector<std::vector<int>> best(next, std::vector<int>(next, -1));
  for (int id = 0; id < graph.num_edges(); ++id) {
    const Edge& e = graph.edge(id);
    int a = q.vertex_map[e.u];
    int b = q.vertex_map[e.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    int& slot = best[a][b];
    if (slot == -1 || e.length < graph.edge(slot).length) slot = id;
  }
  std::vector<Edge> edges;
  for (int a = 0; a < next; ++a) {
    for (int b = a + 1; b < next; ++b) {
      if (best[a][b] == -1) continue;
      edges.push_back({a, b, graph.edge(best[a][b]).length});
      q.edge_origin.push_back(best[a][b]);
    }
  }
  q.graph = WeightedGraph(next, std::move(edges));
  return q;
}

VertexSet InducedSubgraph::ToLocal(const VertexSet& host) const {
  VertexSet out;
  for (int v : host) {
    if (v < static_cast<int>(from_host_vertex.size()) &&
        from_host_vertex[v] >= 0) {
      out.insert(from_host_vertex[v]);
    }
  }
  return out;
}

VertexSet InducedSubgraph::ToHost(const VertexSet& local) const {
  VertexSet out;
  for (int v : local) out.insert(to_host_vertex[v]);
  return out;
}

EdgeMultiSet InducedSubgraph::ToLocal(const EdgeMultiSet& host) const {
  EdgeMultiSet out(graph.num_edges());
  for (int id = 0; id < host.num_edges(); ++id) {
    if (host.count(id) > 0 && from_host_edge[id] >= 0) {
      out.Set(from_host_edge[id], host.count(id));
    }
  }
  return out;
}

EdgeMultiSet InducedSubgraph::ToHost(const EdgeMultiSet& local) const {
  CheckMultiSet(local, graph);
  EdgeMultiSet out(static_cast<int>(from_host_edge.size()));
  for (int id = 0; id < local.num_edges(); ++id) {
    if (local.count(id) > 0) out.Set(to_host_edge[id], local.count(id));
  }
  return out;
}

InducedSubgraph Induced(const WeightedGraph& graph, const VertexSet& subset) {
  InducedSubgraph sub;
  sub.from_host_vertex.assign(graph.num_vertices(), -1);
  for (int v : subset) {
    if (v >= graph.num_vertices()) {
      throw PreconditionError("induced subset exceeds vertex range");
    }
    sub.from_host_vertex[v] = static_cast<int>(sub.to_host_vertex.size());
    sub.to_host_vertex.push_back(v);
  }
  sub.from_host_edge.assign(graph.num_edges(), -1);
  std::vector<Edge> edges;
  for (int id = 0; id < graph.num_edges(); ++id) {
    const Edge& e = graph.edge(id);
    if (!e.inside(subset)) continue;
    // Relabeling is monotone, so canonical order is preserved.
    sub.from_host_edge[id] = static_cast<int>(edges.size());
    sub.to_host_edge.push_back(id);
    edges.push_back(
        {sub.from_host_vertex[e.u], sub.from_host_vertex[e.v], e.length});
  }
  sub.graph = WeightedGraph(static_cast<int>(sub.to_host_vertex.size()),
                            std::move(edges));
  return sub;
}

EdgeMultiSet Restrict(const EdgeMultiSet& f, const WeightedGraph& graph,
                      const VertexSet& subset) {
  CheckMultiSet(f, graph);
  EdgeMultiSet out(f.num_edges());
  for (int id = 0; id < f.num_edges(); ++id) {
    if (f.count(id) > 0 && graph.edge(id).inside(subset)) {
      out.Set(id, f.count(id));
    }
  }
  return out;
}

EdgeMultiSet EdgeSubgraph::ToHost(const EdgeMultiSet& local,
                                  int host_edges) const {
  CheckMultiSet(local, graph);
  EdgeMultiSet out(host_edges);
  for (int id = 0; id < local.num_edges(); ++id) {
    if (local.count(id) > 0) out.Set(to_host_edge[id], local.count(id));
  }
  return out;
}

EdgeSubgraph KeepEdges(const WeightedGraph& graph, const std::vector<bool>& keep) {
  EdgeSubgraph sub;
  std::vector<Edge> edges;
  for (int id = 0; id < graph.num_edges(); ++id) {
    if (!keep[id]) continue;
    edges.push_back(graph.edge(id));
    sub.to_host_edge.push_back(id);
  }
  sub.graph = WeightedGraph(graph.num_vertices(), std::move(edges));
  return sub;
}

// ---------------------------------------------------------------------------
// Connectivity

namespace internal {

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::Find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::Union(int a, int b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

}  // namespace internal

namespace {

std::vector<VertexSet> Partition(internal::UnionFind& uf,
                                 const VertexSet& within, int n) {
  std::vector<int> slot(n, -1);
  std::vector<VertexSet> parts;
  for (int v : within) {
    int root = uf.Find(v);
    if (slot[root] == -1) {
      slot[root] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[slot[root]].insert(v);
  }
  return parts;
}

}  // namespace

std::vector<VertexSet> Components(const WeightedGraph& graph) {
  internal::UnionFind uf(graph.num_vertices());
  for (const Edge& e : graph.edges()) uf.Union(e.u, e.v);
  return Partition(uf, graph.vertices(), graph.num_vertices());
}

std::vector<VertexSet> Components(const WeightedGraph& graph,
                                  const EdgeMultiSet& f) {
  return Components(graph, f, graph.vertices());
}

std::vector<VertexSet> Components(const WeightedGraph& graph,
                                  const EdgeMultiSet& f,
                                  const VertexSet& within) {
  CheckMultiSet(f, graph);
  internal::UnionFind uf(graph.num_vertices());
  for (int id = 0; id < f.num_edges(); ++id) {
    if (f.count(id) == 0) continue;
    const Edge& e = graph.edge(id);
    if (e.inside(within)) uf.Union(e.u, e.v);
  }
  return Partition(uf, within, graph.num_vertices());
}

bool IsConnectedContracted(const WeightedGraph& graph, const EdgeMultiSet& f,
                           const VertexSet& merged) {
  CheckMultiSet(f, graph);
  const int n = graph.num_vertices();
  if (n == 0) return true;
  internal::UnionFind uf(n);
  if (!merged.empty()) {
    int first = merged.min();
    for (int v : merged) uf.Union(first, v);
  }
  int merges = merged.empty() ? 0 : merged.size() - 1;
  for (int id = 0; id < f.num_edges(); ++id) {
    if (f.count(id) == 0) continue;
    if (uf.Union(graph.edge(id).u, graph.edge(id).v)) ++merges;
  }
  return merges == n - 1;
}

// ---------------------------------------------------------------------------
// Shortest paths and spanning forests

std::vector<int> ShortestPaths::PathTo(const WeightedGraph& graph,
                                       int target) const {
  std::vector<int> path;
  int v = target;
  while (v != source) {
    int id = parent_edge[v];
    if (id < 0) throw PreconditionError("target unreachable");
    path.push_back(id);
    v = graph.edge(id).other(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

ShortestPaths Dijkstra(const WeightedGraph& graph, int source) {
  const int n = graph.num_vertices();
  ShortestPaths sp;
  sp.source = source;
  sp.distance.assign(n, std::nullopt);
  sp.parent_edge.assign(n, -1);
  std::vector<int> parent_vertex(n, -1);
  std::vector<bool> settled(n, false);
  sp.distance[source] = Rational(0);
  // O(n^2) selection keeps the settle order fully deterministic.
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (settled[v] || !sp.distance[v]) continue;
      if (pick == -1 || *sp.distance[v] < *sp.distance[pick]) pick = v;
    }
    if (pick == -1) break;
    settled[pick] = true;
    for (const auto& inc : graph.incident(pick)) {
      int w = inc.neighbor;
      if (settled[w]) continue;
      Rational candidate = *sp.distance[pick] + graph.edge(inc.edge).length;
      bool better = !sp.distance[w] || candidate < *sp.distance[w] ||
                    (candidate == *sp.distance[w] && pick < parent_vertex[w]);
      if (better) {
        sp.distance[w] = candidate;
        sp.parent_edge[w] = inc.edge;
        parent_vertex[w] = pick;
      }
    }
  }
  return sp;
}

EdgeMultiSet MinimumSpanningForest(const WeightedGraph& graph) {
  std::vector<int> order(graph.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return graph.edge(a).length < graph.edge(b).length;
  });
  internal::UnionFind uf(graph.num_vertices());
  EdgeMultiSet forest = EdgeMultiSet::Empty(graph);
  for (int id : order) {
    if (uf.Union(graph.edge(id).u, graph.edge(id).v)) forest.Add(id);
  }
  return forest;
}

}  // namespace phitsp
