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

#include "phitsp/laminar.h"

#include <algorithm>
#include <map>

#include "phitsp/errors.h"
#include "phitsp/exact_lp.h"
#include "phitsp/join.h"

namespace phitsp {
namespace {

bool Crossing(const VertexSet& a, const VertexSet& b) {
  return a.Intersects(b) && !a.IsSubsetOf(b) && !b.IsSubsetOf(a);
}

bool OddTargets(const VertexSet& set, const VertexSet& targets) {
  return (set & targets).size() % 2 == 1;
}

}  // namespace

bool LaminarFamily::IsLaminar() const {
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = i + 1; j < sets.size(); ++j) {
      if (Crossing(sets[i], sets[j])) return false;
    }
  }
  return true;
}

int LaminarFamily::Width() const {
  int width = 0;
  for (size_t i = 0; i < sets.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < sets.size() && minimal; ++j) {
      if (i != j && sets[j].IsSubsetOf(sets[i])) minimal = false;
    }
    if (minimal) ++width;
  }
  return width;
}

Rational CutPacking::Total() const {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

Rational LaminarDual::Total() const {
  Rational total = 0;
  for (const Rational& v : y) total += v;
  return total;
}

CutPacking SolveCutPacking(const WeightedGraph& graph, const VertexSet& targets,
                           int max_vertices) {
  const int n = graph.num_vertices();
  if (n > max_vertices) {
    throw SizeCapError("cut packing limited to " +
                       std::to_string(max_vertices) + " vertices, got " +
                       std::to_string(n));
  }
  if (targets.size() % 2 != 0) {
    throw NoTJoinError("target set " + targets.ToString() + " has odd size");
  }
  CutPacking packing;
  if (targets.empty()) return packing;
  ShortestTJoin(graph, targets);  // throws when no T-join exists

  packing.root = targets.min();
  const VertexSet ground = graph.vertices() - VertexSet::Singleton(packing.root);
  std::vector<VertexSet> shores;
  std::vector<SparseColumn> columns;
  // Enumerate submasks of the ground set in increasing order.
  const uint64_t full = ground.bits();
  for (uint64_t sub = full;; sub = (sub - 1) & full) {
    VertexSet shore = VertexSet::FromBits(sub);
    if (OddTargets(shore, targets)) shores.push_back(shore);
    if (sub == 0) break;
  }
  std::sort(shores.begin(), shores.end());
  for (const VertexSet& shore : shores) {
    SparseColumn column;
    for (int e : graph.Cut(shore)) column.emplace_back(e, Rational(1));
    columns.push_back(std::move(column));
  }
  std::vector<Rational> objective(shores.size(), Rational(1));
  std::vector<Rational> rhs;
  for (const Edge& e : graph.edges()) rhs.push_back(e.length);

  LpSolution lp = MaximizePacking(graph.num_edges(), columns, objective, rhs);
  if (lp.status != LpSolution::Status::kOptimal) {
    throw NoTJoinError("T-cut packing is unbounded");
  }
  for (size_t i = 0; i < shores.size(); ++i) {
    if (lp.x[i] > 0) {
      packing.shores.push_back(shores[i]);
      packing.values.push_back(lp.x[i]);
    }
  }
  return packing;
}

LaminarDual Uncross(const WeightedGraph& graph, const VertexSet& targets,
                    const CutPacking& packing, std::optional<long> step_budget) {
  std::map<VertexSet, Rational> support;
  for (size_t i = 0; i < packing.shores.size(); ++i) {
    if (packing.values[i] > 0) support[packing.shores[i]] += packing.values[i];
  }
  const long n = graph.num_vertices();
  const long budget = step_budget.value_or(
      10 * std::max<long>(1, static_cast<long>(support.size())) * n * n);

  long steps = 0;
  while (true) {
    std::optional<std::pair<VertexSet, VertexSet>> pair;
    for (auto a = support.begin(); a != support.end() && !pair; ++a) {
      for (auto b = std::next(a); b != support.end(); ++b) {
        if (Crossing(a->first, b->first)) {
          pair.emplace(a->first, b->first);
          break;
        }
      }
    }
    if (!pair) break;
    if (steps >= budget) {
      throw UncrossingError("uncrossing budget of " + std::to_string(budget) +
                            " steps exhausted");
    }
    ++steps;
    const auto [a, b] = *pair;
    const Rational shift = std::min(support[a], support[b]);
    std::pair<VertexSet, VertexSet> targets_of_shift =
        OddTargets(a & b, targets) ? std::make_pair(a & b, a | b)
                                   : std::make_pair(a - b, b - a);
    for (const VertexSet& old : {a, b}) {
      Rational& value = support[old];
      value -= shift;
      if (value == 0) support.erase(old);
    }
    support[targets_of_shift.first] += shift;
    support[targets_of_shift.second] += shift;
  }

  LaminarDual dual;
  dual.root = packing.root;
  for (const auto& [set, value] : support) {
    dual.family.sets.push_back(set);
    dual.y.push_back(value);
  }
  if (!dual.family.IsLaminar()) {
    throw UncrossingError("uncrossed support is not laminar");
  }
  return dual;
}

DualCheck CheckLaminarDual(const LaminarDual& dual, const WeightedGraph& graph,
                           const VertexSet& targets,
                           const Rational& join_length) {
  auto fail = [](std::string message) { return DualCheck{false, message}; };
  const auto& sets = dual.family.sets;
  if (sets.size() != dual.y.size()) return fail("size mismatch");
  if (!dual.family.IsLaminar()) return fail("support is not laminar");
  for (size_t i = 0; i < sets.size(); ++i) {
    if (dual.y[i] <= 0) return fail("non-positive value on " + sets[i].ToString());
    if (!OddTargets(sets[i], targets)) {
      return fail("set " + sets[i].ToString() + " meets T evenly");
    }
    if (dual.root >= 0 && sets[i].contains(dual.root)) {
      return fail("set " + sets[i].ToString() + " contains the root");
    }
  }
  for (int e = 0; e < graph.num_edges(); ++e) {
    Rational load = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      if (graph.edge(e).crosses(sets[i])) load += dual.y[i];
    }
    if (load > graph.edge(e).length) {
      return fail("edge " + std::to_string(e) + " is overloaded");
    }
  }
  if (dual.Total() != join_length) return fail("total differs from join length");
  return {};
}

LaminarDual BuildLaminarDual(const WeightedGraph& graph,
                             const VertexSet& targets) {
  return Uncross(graph, targets, SolveCutPacking(graph, targets));
}

LaminarFamily BuildLaminarFamily(const WeightedGraph& graph,
                                 const VertexSet& targets) {
  if (targets.empty()) return {};
  return BuildLaminarDual(graph, targets).family;
}

FewEdgeCuts CutsWithFewEdges(const EdgeMultiSet& r, const LaminarFamily& family,
                             int k, const WeightedGraph& graph) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  FewEdgeCuts out;
  out.edges = EdgeMultiSet::Empty(graph);
  std::vector<bool> selected_edge(graph.num_edges(), false);
  for (const VertexSet& set : family.sets) {
    std::vector<int> cut = graph.Cut(set);
    int crossing = 0;
    for (int e : cut) crossing += r.count(e);
    if (crossing > k) continue;
    out.family.sets.push_back(set);
    for (int e : cut) selected_edge[e] = true;
  }
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (selected_edge[e]) out.edges.Set(e, r.count(e));
  }
  return out;
}

}  // namespace phitsp
