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

#ifndef PHITSP_APPROX_H_
#define PHITSP_APPROX_H_

#include <span>
#include <vector>

#include "phitsp/graph.h"
#include "phitsp/interface.h"

namespace phitsp {

inline constexpr int kMaxExactTspVertices = 10;

// Spanning tree plus a shortest join of its odd vertices. G must be connected.
EdgeMultiSet ChristofidesTsp(const WeightedGraph& graph);

// Optimal tour by trying every vertex order over shortest-path distances and
// expanding each step into its shortest path. G must be connected and have
// at most kMaxExactTspVertices vertices.
EdgeMultiSet ExactTsp(const WeightedGraph& graph);

// Primal-dual moat growing followed by reverse deletion. Every group must lie
// within one component of G. Returns a 0/1 edge set.
EdgeMultiSet SteinerForest(const WeightedGraph& graph,
                           std::span<const VertexSet> groups);

struct SevenApproxParts {
  EdgeMultiSet join;      // shortest T-join
  EdgeMultiSet contracted_tree;  // spanning tree of G/I, lifted
  EdgeMultiSet forest;    // Steiner forest over the parts of C
  EdgeMultiSet tour;      // join + 2 * tree + 2 * forest
};

SevenApproxParts SevenApproxPhiParts(const PhiInstance& inst);
EdgeMultiSet SevenApproxPhi(const PhiInstance& inst);

}  // namespace phitsp

#endif  // PHITSP_APPROX_H_
