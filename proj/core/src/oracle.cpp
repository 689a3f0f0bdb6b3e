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

#include "phitsp/oracle.h"

#include <optional>

#include "phitsp/errors.h"

namespace phitsp {
namespace {

void RequireEdgeCap(const WeightedGraph& graph, int cap) {
  if (graph.num_edges() > cap) {
    throw SizeCapError("oracle limited to " + std::to_string(cap) +
                       " edges, got " + std::to_string(graph.num_edges()));
  }
}

// Depth-first search over multiplicity vectors in lexicographic order. A
// vertex's parity is settled once its highest-id incident edge is assigned.
class ParitySearch {
 public:
  ParitySearch(const WeightedGraph& graph, const VertexSet& targets,
               int max_multiplicity)
      : graph_(graph),
        targets_(targets),
        max_multiplicity_(max_multiplicity),
        settles_(graph.num_edges()),
        degree_(graph.num_vertices(), 0),
        current_(EdgeMultiSet::Empty(graph)) {
    for (int v = 0; v < graph.num_vertices(); ++v) {
      int last = -1;
      for (const auto& inc : graph.incident(v)) last = std::max(last, inc.edge);
      if (last == -1) {
        if (targets.contains(v)) impossible_ = true;
      } else {
        settles_[last].push_back(v);
      }
    }
  }

  // Visits every parity-correct vector; the visitor returns the current
  // pruning bound (or nullopt for none).
  template <typename Visit>
  void Run(Visit&& visit) {
    if (impossible_) return;
    Rational length = 0;
    Search(0, length, visit);
  }

  const EdgeMultiSet& current() const { return current_; }

 private:
  template <typename Visit>
  void Search(int e, Rational& length, Visit& visit) {
    if (e == graph_.num_edges()) {
      bound_ = visit(current_, length);
      return;
    }
    const Edge& edge = graph_.edge(e);
    for (int mult = 0; mult <= max_multiplicity_; ++mult) {
      Rational extended = length + edge.length * mult;
      if (bound_ && extended > *bound_) break;
      degree_[edge.u] += mult;
      degree_[edge.v] += mult;
      bool parity_ok = true;
      for (int v : settles_[e]) {
        if ((degree_[v] % 2 == 1) != targets_.contains(v)) parity_ok = false;
      }
      if (parity_ok) {
        current_.Set(e, mult);
        Search(e + 1, extended, visit);
        current_.Set(e, 0);
      }
      degree_[edge.u] -= mult;
      degree_[edge.v] -= mult;
    }
  }

  const WeightedGraph& graph_;
  VertexSet targets_;
  int max_multiplicity_;
  std::vector<std::vector<int>> settles_;
  std::vector<int> degree_;
  EdgeMultiSet current_;
  std::optional<Rational> bound_;
  bool impossible_ = false;
};

}  // namespace

OracleResult OraclePhiOpt(const PhiInstance& inst, const OracleOptions& options) {
  RequireEdgeCap(inst.graph, options.max_edges);
  OracleResult result;
  result.witness = EdgeMultiSet::Empty(inst.graph);
  ParitySearch search(inst.graph, inst.phi.odd_targets(),
                      options.max_multiplicity);
  search.Run([&](const EdgeMultiSet& f, const Rational& length)
                 -> std::optional<Rational> {
    if (result.feasible && length > result.optimum) return result.optimum;
    if (IsPhiTour(f, inst)) {
      if (!result.feasible || length < result.optimum) {
        result.feasible = true;
        result.optimum = length;
        result.witness = f;
        result.num_optima = 1;
      } else {
        ++result.num_optima;
      }
    }
    if (!result.feasible) return std::nullopt;
    return result.optimum;
  });
  return result;
}

OracleResult OracleTsp(const WeightedGraph& graph, const OracleOptions& options) {
  return OraclePhiOpt(PhiInstance(graph, Interface()), options);
}

OracleResult OraclePathTsp(const WeightedGraph& graph, int s, int t,
                           const OracleOptions& options) {
  if (s == t) return OracleTsp(graph, options);
  return OraclePhiOpt(PhiInstance(graph, Interface::Path(s, t)), options);
}

std::vector<EdgeMultiSet> OracleTJoins(const WeightedGraph& graph,
                                       const VertexSet& targets,
                                       int max_edges) {
  RequireEdgeCap(graph, max_edges);
  std::vector<EdgeMultiSet> joins;
  ParitySearch search(graph, targets, 1);
  search.Run([&](const EdgeMultiSet& f, const Rational&)
                 -> std::optional<Rational> {
    joins.push_back(f);
    return std::nullopt;
  });
  return joins;
}

OracleResult OracleSteinerForest(const WeightedGraph& graph,
                                 std::span<const VertexSet> groups,
                                 int max_edges) {
  RequireEdgeCap(graph, max_edges);
  const int m = graph.num_edges();
  OracleResult result;
  result.witness = EdgeMultiSet::Empty(graph);
  EdgeMultiSet f = EdgeMultiSet::Empty(graph);
  // Indicator vectors in lexicographic order: edge 0 is the most significant.
  for (uint64_t code = 0; code < (uint64_t{1} << m); ++code) {
    Rational length = 0;
    for (int e = 0; e < m; ++e) {
      int bit = static_cast<int>((code >> (m - 1 - e)) & 1u);
      f.Set(e, bit);
      if (bit) length += graph.edge(e).length;
    }
    if (result.feasible && length > result.optimum) continue;
    std::vector<VertexSet> parts = Components(graph, f);
    bool ok = true;
    for (const VertexSet& group : groups) {
      bool inside = group.size() < 2;
      for (const VertexSet& part : parts) {
        if (group.IsSubsetOf(part)) inside = true;
      }
      if (!inside) ok = false;
    }
    if (!ok) continue;
    if (!result.feasible || length < result.optimum) {
      result.feasible = true;
      result.optimum = length;
      result.witness = f;
      result.num_optima = 1;
    } else {
      ++result.num_optima;
    }
  }
  return result;
}

}  // namespace phitsp
