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

#ifndef PHITSP_LAMINAR_H_
#define PHITSP_LAMINAR_H_

#include <optional>
#include <string>
#include <vector>

#include "phitsp/graph.h"

namespace phitsp {

inline constexpr int kMaxCutPackingVertices = 14;

// A set family over V. Sets are kept sorted and distinct.
struct LaminarFamily {
  std::vector<VertexSet> sets;

  bool IsLaminar() const;
  // Number of inclusion-minimal members.
  int Width() const;
  bool empty() const { return sets.empty(); }
  int size() const { return static_cast<int>(sets.size()); }
};

// A T-cut packing: shore Q carries value[i] on the cut of shores[i].
struct CutPacking {
  int root = -1;  // the excluded target vertex t
  std::vector<VertexSet> shores;
  std::vector<Rational> values;

  Rational Total() const;
};

// Optimal fractional T-cut packing over every shore Q of V - {t} with
// |Q & T| odd, where t = min(T). Throws SizeCapError above max_vertices and
// NoTJoinError if no T-join exists.
CutPacking SolveCutPacking(const WeightedGraph& graph, const VertexSet& targets,
                           int max_vertices = kMaxCutPackingVertices);

struct LaminarDual {
  int root = -1;
  LaminarFamily family;
  std::vector<Rational> y;  // parallel to family.sets, all positive

  Rational Total() const;
};

// Rewrites a feasible packing into one with laminar support and the same
// total. The default budget is 10 * |support| * n^2 steps; running out, or
// ending with a non-laminar support, throws UncrossingError.
LaminarDual Uncross(const WeightedGraph& graph, const VertexSet& targets,
                    const CutPacking& packing,
                    std::optional<long> step_budget = std::nullopt);

struct DualCheck {
  bool ok = true;
  std::string failure;
};

// Edge capacities, total equal to join_length, odd target count per set,
// root exclusion, positivity and laminarity, all checked exactly.
DualCheck CheckLaminarDual(const LaminarDual& dual, const WeightedGraph& graph,
                           const VertexSet& targets,
                           const Rational& join_length);

LaminarDual BuildLaminarDual(const WeightedGraph& graph,
                             const VertexSet& targets);

// Support of the uncrossed optimal packing; empty when T is empty.
LaminarFamily BuildLaminarFamily(const WeightedGraph& graph,
                                 const VertexSet& targets);

struct FewEdgeCuts {
  LaminarFamily family;  // members whose cut meets R at most k times
  EdgeMultiSet edges;    // R restricted to the union of those cuts
};

FewEdgeCuts CutsWithFewEdges(const EdgeMultiSet& r, const LaminarFamily& family,
                             int k, const WeightedGraph& graph);

}  // namespace phitsp

#endif  // PHITSP_LAMINAR_H_
