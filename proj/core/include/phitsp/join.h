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

#ifndef PHITSP_JOIN_H_
#define PHITSP_JOIN_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "phitsp/graph.h"

namespace phitsp {

// Largest point count accepted by the exact subset-DP matching.
inline constexpr int kMaxMatchingPoints = 20;

// Symmetric cost matrix; nullopt marks an infinite (forbidden) pair.
using CostMatrix = std::vector<std::vector<std::optional<Rational>>>;

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (i, j) with i < j, sorted
  Rational cost;
};

// Exact minimum-cost perfect matching by DP over subsets. Among optimal
// matchings the lowest unmatched point always takes the smallest partner.
// Throws PreconditionError for an odd point count, SizeCapError above
// kMaxMatchingPoints and NoMatchingError if every perfect matching needs an
// infinite pair.
Matching MinWeightPerfectMatching(const CostMatrix& cost);

struct JoinResult {
  EdgeMultiSet join;  // multiplicities are 0 or 1
  Rational length;
};

// Shortest T-join: metric closure on T, exact matching, then the symmetric
// difference of the matched shortest paths.
// Throws NoTJoinError when a component of G holds an odd number of T.
JoinResult ShortestTJoin(const WeightedGraph& graph, const VertexSet& targets);

// Some J inside support(F) with odd(J) = T, built by tree parity on a
// spanning forest of (V, F). Throws NoTJoinError when a component of (V, F)
// holds an odd number of T.
EdgeMultiSet ExtractTJoinWithin(const EdgeMultiSet& f,
                                const VertexSet& targets,
                                const WeightedGraph& graph);

}  // namespace phitsp

#endif  // PHITSP_JOIN_H_
