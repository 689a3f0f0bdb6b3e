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

#ifndef PHITSP_TESTS_SUPPORT_FIXTURES_H_
#define PHITSP_TESTS_SUPPORT_FIXTURES_H_

#include <random>
#include <utility>
#include <vector>

#include "phitsp/generator.h"
#include "phitsp/graph.h"
#include "phitsp/interface.h"
#include "phitsp/laminar.h"

namespace phitsp::testing {

WeightedGraph UnitGraph(int n, const std::vector<std::pair<int, int>>& pairs);
WeightedGraph Complete(int n);
WeightedGraph UnitPath(int n);   // 0-1-...-(n-1)
WeightedGraph UnitCycle(int n);  // 0-1-...-(n-1)-0
WeightedGraph TwoTriangles();    // {0,1,2} and {3,4,5}

// One representative per isomorphism class of graphs on n vertices (n <= 6),
// all with unit lengths.
std::vector<WeightedGraph> GraphsUpToIsomorphism(int n, bool connected_only);

// Uniform draws from a seeded engine.
int Uniform(std::mt19937_64& rng, int lo, int hi);

// I uniform over subsets of V, T uniform over even subsets of I, C a random
// partition of I.
Interface RandomInterface(std::mt19937_64& rng, int n);

// Random generator options with n in [n_lo, n_hi] and a moderate edge count.
GenOptions RandomGenOptions(std::mt19937_64& rng, int n_lo, int n_hi,
                            GenMode mode, int max_interface);

// Random partition of the set into at most max_parts non-empty blocks.
std::vector<VertexSet> RandomPartition(std::mt19937_64& rng, const VertexSet& set,
                                       int max_parts);

// Random laminar family over V with width at most max_width.
LaminarFamily RandomLaminarFamily(std::mt19937_64& rng, int n, int max_width);

// Tour with extra doubled edges; stays a Phi-tour.
EdgeMultiSet AddRandomPairs(std::mt19937_64& rng, EdgeMultiSet f, int max_pairs);

}  // namespace phitsp::testing

#endif  // PHITSP_TESTS_SUPPORT_FIXTURES_H_
