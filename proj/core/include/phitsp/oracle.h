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

#ifndef PHITSP_ORACLE_H_
#define PHITSP_ORACLE_H_

#include <span>
#include <vector>

#include "phitsp/graph.h"
#include "phitsp/interface.h"

namespace phitsp {

struct OracleOptions {
  int max_edges = 18;
  // 2 suffices: dropping two copies of an edge keeps parity and
  // connectivity. 3 is the paranoid setting.
  int max_multiplicity = 2;
};

struct OracleResult {
  bool feasible = false;
  Rational optimum;          // meaningful only when feasible
  EdgeMultiSet witness;      // lexicographically smallest optimum
  long long num_optima = 0;  // within the searched multiplicity range
};

OracleResult OraclePhiOpt(const PhiInstance& inst, const OracleOptions& options = {});
OracleResult OracleTsp(const WeightedGraph& graph, const OracleOptions& options = {});
OracleResult OraclePathTsp(const WeightedGraph& graph, int s, int t,
                           const OracleOptions& options = {});

// Every edge subset (multiplicities 0/1) whose odd vertices are T, in
// lexicographic order of the indicator vector.
std::vector<EdgeMultiSet> OracleTJoins(const WeightedGraph& graph,
                                       const VertexSet& targets,
                                       int max_edges = 24);

// Minimum edge subset connecting each group internally.
OracleResult OracleSteinerForest(const WeightedGraph& graph,
                                 std::span<const VertexSet> groups,
                                 int max_edges = 20);

}  // namespace phitsp

#endif  // PHITSP_ORACLE_H_
