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

#ifndef PHITSP_GRAPH_H_
#define PHITSP_GRAPH_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phitsp/rational.h"

namespace phitsp {

// Vertex ids are 0..n-1 and vertex sets are 64-bit masks, so graphs are
// limited to this many vertices.
inline constexpr int kMaxVertices = 64;

// A subset of the vertices of a host graph, with bitset semantics.
class VertexSet {
 public:
  class Iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    Iterator() = default;
    explicit Iterator(uint64_t bits) : bits_(bits) {}
    int operator*() const { return std::countr_zero(bits_); }
    Iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator&) const = default;

   private:
    uint64_t bits_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> members);

  static constexpr VertexSet FromBits(uint64_t bits) {
    VertexSet set;
    set.bits_ = bits;
    return set;
  }

  static VertexSet FromMembers(std::span<const int> members);
  // {0, ..., n-1}.
  static VertexSet Range(int n);
  static VertexSet Singleton(int v);

  uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool contains(int v) const { return (bits_ >> v) & 1u; }
  // Smallest member; requires !empty().
  int min() const { return std::countr_zero(bits_); }

  void insert(int v) { bits_ |= uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(uint64_t{1} << v); }

  bool IsSubsetOf(const VertexSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  bool Intersects(const VertexSet& other) const {
    return (bits_ & other.bits_) != 0;
  }

  VertexSet operator|(const VertexSet& o) const { return FromBits(bits_ | o.bits_); }
  VertexSet operator&(const VertexSet& o) const { return FromBits(bits_ & o.bits_); }
  VertexSet operator^(const VertexSet& o) const { return FromBits(bits_ ^ o.bits_); }
  VertexSet operator-(const VertexSet& o) const { return FromBits(bits_ & ~o.bits_); }
  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator^=(const VertexSet& o) { bits_ ^= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ &= ~o.bits_; return *this; }

  auto operator<=>(const VertexSet&) const = default;

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  std::vector<int> members() const;
  // "{0,2,5}".
  std::string ToString() const;

 private:
  uint64_t bits_ = 0;
};

struct Edge {
  int u = 0;
  int v = 0;
  Rational length;

  int other(int w) const { return w == u ? v : u; }
  bool inside(const VertexSet& set) const {
    return set.contains(u) && set.contains(v);
  }
  bool crosses(const VertexSet& set) const {
    return set.contains(u) != set.contains(v);
  }
};

// Simple undirected graph with non-negative exact lengths. Edges are stored
// with u < v, sorted by (u, v); an edge id is its index in that order.
class WeightedGraph {
 public:
  struct Incidence {
    int neighbor;
    int edge;
  };

  WeightedGraph() = default;
  // Throws PreconditionError on loops, parallel edges, negative lengths or
  // out-of-range endpoints. Endpoint order within an edge is irrelevant.
  WeightedGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(int v) const { return adjacency_[v]; }
  VertexSet vertices() const { return VertexSet::Range(num_vertices_); }

  std::optional<int> FindEdge(int u, int v) const;
  // Edges with exactly one endpoint in the set.
  std::vector<int> Cut(const VertexSet& set) const;
  // Edges with both endpoints in the set.
  std::vector<int> EdgesInside(const VertexSet& set) const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Multiset of edges of a host graph, stored as one multiplicity per edge id.
class EdgeMultiSet {
 public:
  EdgeMultiSet() = default;
  explicit EdgeMultiSet(int num_edges) : counts_(num_edges, 0) {}
  static EdgeMultiSet Empty(const WeightedGraph& graph) {
    return EdgeMultiSet(graph.num_edges());
  }
  // Throws MalformedMultisetError if an id is out of range or a count is
  // negative.
  static EdgeMultiSet FromPairs(int num_edges,
                                std::span<const std::pair<int, int>> entries);
  static EdgeMultiSet FromEdges(int num_edges, std::span<const int> ids);

  int num_edges() const { return static_cast<int>(counts_.size()); }
  int count(int id) const { return counts_[id]; }
  std::span<const int> counts() const { return counts_; }

  void Add(int id, int times = 1);
  void Set(int id, int times);
  // Multi-union.
  EdgeMultiSet& operator+=(const EdgeMultiSet& other);
  friend EdgeMultiSet operator+(EdgeMultiSet a, const EdgeMultiSet& b) {
    a += b;
    return a;
  }

  bool empty() const;
  // Number of edges counting multiplicity.
  int size() const;
  std::vector<int> Support() const;
  Rational Length(const WeightedGraph& graph) const;

  // Lexicographic on the multiplicity vector; this is the canonical
  // tie-break order used across the library.
  auto operator<=>(const EdgeMultiSet&) const = default;

 private:
  std::vector<int> counts_;
};

// Vertices of odd degree in F, counting multiplicity.
// Throws MalformedMultisetError if F does not belong to the graph.
VertexSet OddVertices(const EdgeMultiSet& f, const WeightedGraph& graph);

// Throws MalformedMultisetError unless f is sized for graph.
void CheckMultiSet(const EdgeMultiSet& f, const WeightedGraph& graph);

// G/I. Quotient vertices are numbered by increasing smallest member of their
// class; parallel edges collapse to the shortest one (smallest host id on
// ties) and loops vanish.
struct Quotient {
  WeightedGraph graph;
  std::vector<int> vertex_map;   // host vertex -> quotient vertex
  std::vector<int> edge_origin;  // quotient edge -> host edge id
};
Quotient Contract(const WeightedGraph& graph, const VertexSet& merged);

// G[W] with vertices relabeled 0..|W|-1 in increasing host order.
struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<int> to_host_vertex;
  std::vector<int> from_host_vertex;  // -1 outside W
  std::vector<int> to_host_edge;
  std::vector<int> from_host_edge;  // -1 outside E[W]

  VertexSet ToLocal(const VertexSet& host) const;
  VertexSet ToHost(const VertexSet& local) const;
  // Host multiset restricted to E[W], in local ids.
  EdgeMultiSet ToLocal(const EdgeMultiSet& host) const;
  EdgeMultiSet ToHost(const EdgeMultiSet& local) const;
};
InducedSubgraph Induced(const WeightedGraph& graph, const VertexSet& subset);

// F[W] in host ids: the edges of F with both endpoints in W.
EdgeMultiSet Restrict(const EdgeMultiSet& f, const WeightedGraph& graph,
                      const VertexSet& subset);

// The graph on the same vertices keeping only the listed edges.
struct EdgeSubgraph {
  WeightedGraph graph;
  std::vector<int> to_host_edge;
  EdgeMultiSet ToHost(const EdgeMultiSet& local, int host_edges) const;
};
EdgeSubgraph KeepEdges(const WeightedGraph& graph, const std::vector<bool>& keep);

// Connected components as a canonical partition of V (parts ordered by
// smallest member).
std::vector<VertexSet> Components(const WeightedGraph& graph);
// Components of (V, support(F)).
std::vector<VertexSet> Components(const WeightedGraph& graph,
                                  const EdgeMultiSet& f);
// Components of (W, F[W]) for a vertex subset W.
std::vector<VertexSet> Components(const WeightedGraph& graph,
                                  const EdgeMultiSet& f,
                                  const VertexSet& within);

// True iff (V, F)/I is connected.
bool IsConnectedContracted(const WeightedGraph& graph, const EdgeMultiSet& f,
                           const VertexSet& merged);

struct ShortestPaths {
  int source = 0;
  std::vector<std::optional<Rational>> distance;  // nullopt = unreachable
  std::vector<int> parent_edge;                   // -1 at source/unreachable

  // Edge ids of the tree path source -> target (target must be reachable).
  std::vector<int> PathTo(const WeightedGraph& graph, int target) const;
};
// Exact Dijkstra. Among equally short routes the parent is the smallest-id
// vertex settled earlier, so the result is deterministic.
ShortestPaths Dijkstra(const WeightedGraph& graph, int source);

// Minimum spanning forest by Kruskal over edges sorted by (length, id).
EdgeMultiSet MinimumSpanningForest(const WeightedGraph& graph);

namespace internal {

class UnionFind {
 public:
  explicit UnionFind(int n);
  int Find(int x);
  bool Union(int a, int b);

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace internal

}  // namespace phitsp

#endif  // PHITSP_GRAPH_H_
