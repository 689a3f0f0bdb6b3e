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

#include <algorithm>
#include <map>
#include <optional>

#include "phitsp/errors.h"
#include "phitsp/reduction.h"

namespace phitsp {
namespace {

struct Option {
  EdgeMultiSet tour;
  Rational length;
};

// Top-down evaluation of the laminar dynamic program. Each cell (L, Phi_L)
// is a deterministic function of its key, so only cells reachable from the
// root are computed.
class LaminarDp {
 public:
  LaminarDp(const PhiInstance& inst, const LaminarFamily& family, int k,
            const PhiAlgorithm& base, const DpOptions& options, DpStats& stats)
      : graph_(inst.graph),
        k_(k),
        interface_limit_(inst.phi.size() + k),
        base_(base),
        options_(options),
        stats_(stats) {
    const VertexSet all = graph_.vertices();
    for (const VertexSet& set : family.sets) {
      if (set.empty() || !set.IsSubsetOf(all)) {
        throw PreconditionError("family member " + set.ToString() +
                                " is not a non-empty subset of V");
      }
      if (set != all) sets_.push_back(set);
    }
    std::sort(sets_.begin(), sets_.end(),
              [](const VertexSet& a, const VertexSet& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  std::optional<EdgeMultiSet> Solve(const VertexSet& set, const Interface& phi) {
    InterfaceKey key = CanonicalKey(phi, set);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++stats_.cells;

    Cell cell{set, phi, std::nullopt};
    std::vector<VertexSet> candidates;
    for (const VertexSet& child : sets_) {
      if (child != set && child.IsSubsetOf(set)) candidates.push_back(child);
    }
    std::vector<VertexSet> chosen;
    EnumerateSubfamilies(cell, candidates, 0, chosen);

    std::optional<EdgeMultiSet> result;
    if (cell.best) result = std::move(cell.best->tour);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  struct Cell {
    VertexSet set;
    const Interface& phi;
    std::optional<Option> best;
  };

  // A guessed crossing edge and the blocks of its endpoints.
  struct CrossEdge {
    int id;
    int block_u;
    int block_v;
  };

  void EnumerateSubfamilies(Cell& cell, const std::vector<VertexSet>& candidates,
                            size_t next, std::vector<VertexSet>& chosen) {
    EvaluateSubfamily(cell, chosen);
    for (size_t i = next; i < candidates.size(); ++i) {
      bool disjoint = true;
      for (const VertexSet& other : chosen) {
        if (other.Intersects(candidates[i])) disjoint = false;
      }
      if (!disjoint) continue;
      chosen.push_back(candidates[i]);
      EnumerateSubfamilies(cell, candidates, i + 1, chosen);
      chosen.pop_back();
    }
  }

  void EvaluateSubfamily(Cell& cell, const std::vector<VertexSet>& children) {
    // Block 0 is the remainder; blocks 1..p are the children.
    std::vector<VertexSet> blocks{cell.set};
    for (const VertexSet& child : children) {
      blocks.push_back(child);
      blocks[0] -= child;
    }
    auto block_of = [&](int v) {
      for (size_t b = 1; b < blocks.size(); ++b) {
        if (blocks[b].contains(v)) return static_cast<int>(b);
      }
      return 0;
    };
    std::vector<CrossEdge> cross;
    for (int e : graph_.EdgesInside(cell.set)) {
      int bu = block_of(graph_.edge(e).u);
      int bv = block_of(graph_.edge(e).v);
      if (bu != bv) cross.push_back({e, bu, bv});
    }
    std::vector<int> per_child(blocks.size(), 0);
    EdgeMultiSet crossing = EdgeMultiSet::Empty(graph_);
    EnumerateCrossing(cell, blocks, cross, 0, per_child, crossing);
  }

  void EnumerateCrossing(Cell& cell, const std::vector<VertexSet>& blocks,
                         const std::vector<CrossEdge>& cross, size_t next,
                         std::vector<int>& per_child, EdgeMultiSet& crossing) {
    if (next == cross.size()) {
      EvaluateCrossing(cell, blocks, crossing);
      return;
    }
    const CrossEdge& edge = cross[next];
    for (int mult = 0; mult <= options_.crossing_multiplicity; ++mult) {
      per_child[edge.block_u] += mult;
      per_child[edge.block_v] += mult;
      bool within_budget = (edge.block_u == 0 || per_child[edge.block_u] <= k_) &&
                           (edge.block_v == 0 || per_child[edge.block_v] <= k_);
      if (within_budget) {
        crossing.Set(edge.id, mult);
        EnumerateCrossing(cell, blocks, cross, next + 1, per_child, crossing);
        crossing.Set(edge.id, 0);
      }
      per_child[edge.block_u] -= mult;
      per_child[edge.block_v] -= mult;
      if (!within_budget) break;
    }
  }

  void EvaluateCrossing(Cell& cell, const std::vector<VertexSet>& blocks,
                        const EdgeMultiSet& crossing) {
    const Interface& phi = cell.phi;
    VertexSet endpoints;
    for (int e : crossing.Support()) {
      endpoints.insert(graph_.edge(e).u);
      endpoints.insert(graph_.edge(e).v);
    }
    // The targets of each block are forced by the parity of the whole.
    const VertexSet targets = phi.odd_targets() ^ OddVertices(crossing, graph_);

    // options[b]: every non-Nil (interface, tour) choice for block b.
    std::vector<std::vector<Option>> options(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) {
      const VertexSet iface = (phi.interface_vertices() & blocks[b]) |
                              (endpoints & blocks[b]);
      const VertexSet odd = targets & blocks[b];
      if (!odd.IsSubsetOf(iface) || odd.size() % 2 != 0) return;
      if (b > 0 && iface.size() > interface_limit_) return;
      // Without children the remainder is the whole cell and keeps its own
      // interface; coarser guesses only admit fewer tours.
      std::vector<std::vector<VertexSet>> guesses;
      if (blocks.size() == 1) {
        guesses.emplace_back(phi.parts().begin(), phi.parts().end());
      } else {
        guesses = Partitions(iface);
      }
      for (const auto& parts : guesses) {
        Interface sub(iface, odd, parts);
        std::optional<EdgeMultiSet> tour =
            b == 0 ? Base(blocks[0], sub) : Solve(blocks[b], sub);
        if (tour) {
          Rational length = tour->Length(graph_);
          options[b].push_back({std::move(*tour), std::move(length)});
        }
      }
      if (options[b].empty()) return;
    }

    const Rational crossing_length = crossing.Length(graph_);
    std::vector<size_t> pick(blocks.size(), 0);
    while (true) {
      if (++stats_.candidates > options_.node_cap) {
        throw SizeCapError("laminar DP exceeded " +
                           std::to_string(options_.node_cap) +
                           " candidates at set " + cell.set.ToString() +
                           " with " + std::to_string(blocks.size() - 1) +
                           " children");
      }
      Rational length = crossing_length;
      for (size_t b = 0; b < blocks.size(); ++b) length += options[b][pick[b]].length;
      if (!cell.best || length <= cell.best->length) {
        EdgeMultiSet combined = crossing;
        for (size_t b = 0; b < blocks.size(); ++b) combined += options[b][pick[b]].tour;
        bool better = !cell.best || length < cell.best->length ||
                      combined < cell.best->tour;
        if (better &&
            DiagnosePhiTourWithin(graph_, cell.set, combined, phi).ok()) {
          cell.best = Option{std::move(combined), std::move(length)};
        }
      }
      size_t b = 0;
      while (b < blocks.size() && ++pick[b] == options[b].size()) {
        pick[b] = 0;
        ++b;
      }
      if (b == blocks.size()) break;
    }
  }

  std::optional<EdgeMultiSet> Base(const VertexSet& set, const Interface& phi) {
    if (set.empty()) return EdgeMultiSet::Empty(graph_);
    InterfaceKey key = CanonicalKey(phi, set);
    if (auto it = base_cache_.find(key); it != base_cache_.end()) {
      return it->second;
    }
    std::optional<EdgeMultiSet> result;
    if (CheckFeasibilityWithin(graph_, set, phi).feasible) {
      InducedSubgraph sub = Induced(graph_, set);
      PhiInstance local(sub.graph, phi.Relabel(sub.from_host_vertex));
      ++stats_.base_calls;
      result = sub.ToHost(base_.run(local));
    }
    base_cache_.emplace(std::move(key), result);
    return result;
  }

  const std::vector<std::vector<VertexSet>>& Partitions(const VertexSet& set) {
    auto it = partitions_.find(set);
    if (it == partitions_.end()) {
      it = partitions_.emplace(set, SetPartitions(set)).first;
    }
    return it->second;
  }

  const WeightedGraph& graph_;
  int k_;
  int interface_limit_;
  const PhiAlgorithm& base_;
  const DpOptions& options_;
  DpStats& stats_;
  std::vector<VertexSet> sets_;
  std::map<InterfaceKey, std::optional<EdgeMultiSet>> memo_;
  std::map<InterfaceKey, std::optional<EdgeMultiSet>> base_cache_;
  std::map<VertexSet, std::vector<std::vector<VertexSet>>> partitions_;
};

}  // namespace

EdgeMultiSet DpGuess(const PhiInstance& inst, const LaminarFamily& family,
                     int k, const PhiAlgorithm& base, const DpOptions& options,
                     DpStats* stats) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  if (options.crossing_multiplicity < 1) {
    throw PreconditionError("crossing multiplicity must be at least 1");
  }
  if (!family.IsLaminar()) throw PreconditionError("family is not laminar");
  Feasibility feasibility = CheckFeasibility(inst);
  if (!feasibility.feasible) throw InfeasibleError(feasibility.Describe());

  DpStats local_stats;
  LaminarDp dp(inst, family, k, base, options, stats ? *stats : local_stats);
  std::optional<EdgeMultiSet> tour = dp.Solve(inst.graph.vertices(), inst.phi);
  if (!tour) throw InfeasibleError("dynamic program found no Phi-tour");
  return *tour;
}

}  // namespace phitsp
