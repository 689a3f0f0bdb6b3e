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

#ifndef PHITSP_REDUCTION_H_
#define PHITSP_REDUCTION_H_

#include <optional>
#include <string>
#include <vector>

#include "phitsp/graph.h"
#include "phitsp/interface.h"
#include "phitsp/join.h"
#include "phitsp/laminar.h"
#include "phitsp/registry.h"

namespace phitsp {

// Per-component tours from the TSP algorithm plus the given T-join J.
EdgeMultiSet SimplePhi(const PhiInstance& inst, const TspAlgorithm& tsp,
                       const JoinResult& join);

struct ShortJoinOptions {
  // Distinct deletion sets tried before giving up with SizeCapError.
  long enumeration_cap = 200000;
};

// Heavy-edge guessing: for every threshold set H (all edges at least as long
// as some edge, or nothing) and every kept subset of at most 2|I|/delta
// edges of H outside J, delete the rest of H and run SimplePhi.
EdgeMultiSet ShortTJoinAlgo(const PhiInstance& inst, const TspAlgorithm& tsp,
                            const Rational& delta,
                            const ShortJoinOptions& options = {});

struct DpOptions {
  // Copies of one edge allowed in a guessed crossing set.
  int crossing_multiplicity = 1;
  // Candidate combinations examined before giving up with SizeCapError.
  long node_cap = 20000000;
};

struct DpStats {
  long cells = 0;       // (set, interface) pairs evaluated
  long candidates = 0;  // combinations examined
  long base_calls = 0;
};

// Dynamic program over the laminar family plus V. Returns the best
// Phi-tour found for the root cell; candidates of equal length are ordered
// by their multiplicity vectors.
EdgeMultiSet DpGuess(const PhiInstance& inst, const LaminarFamily& family,
                     int k, const PhiAlgorithm& base,
                     const DpOptions& options = {}, DpStats* stats = nullptr);

// k = floor(1/delta) unless k_override is set. With T empty, calls the base
// algorithm directly.
EdgeMultiSet LongTJoinAlgo(const PhiInstance& inst, const PhiAlgorithm& base,
                           const Rational& delta, const DpOptions& options = {},
                           std::optional<int> k_override = std::nullopt);

// max{(1 + eps) alpha, beta - eps/8 (beta - 1)}.
Rational BoostFactor(const Rational& alpha, const Rational& beta,
                     const Rational& epsilon);

struct BoostOptions {
  ShortJoinOptions short_join;
  DpOptions dp;
  std::optional<int> dp_k;  // replaces floor(8/epsilon) when set
};

// Shorter of ShortTJoinAlgo(delta = eps/2) and LongTJoinAlgo(delta = eps/8).
EdgeMultiSet BoostOnce(const PhiInstance& inst, const TspAlgorithm& tsp,
                       const PhiAlgorithm& base, const Rational& epsilon,
                       const BoostOptions& options = {});

struct ScheduleLevel {
  int level = 0;
  Rational beta;
  Rational k;  // interface size the level must handle
};

struct BoostSchedule {
  int num_levels = 0;  // the last level index
  Rational epsilon_prime;
  std::vector<ScheduleLevel> levels;  // indices 0..num_levels
};

// Requires alpha > 1, epsilon > 0 and beta0 >= alpha + epsilon.
BoostSchedule MakeBoostSchedule(int k, const Rational& epsilon,
                                const Rational& alpha, const Rational& beta0);

struct BoostParams {
  Rational epsilon = 1;
  std::string tsp_algorithm = "christofides";
  std::string base_algorithm = "seven-approx";
  // Claimed factors; default to the registered guarantees.
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  int k_interface_cap = 2;
  int max_boost_iters = 1;
  int dp_k = 0;  // <= 0 means floor(8 / epsilon') at every level
  BoostOptions options;
};

struct LevelReport {
  int level = 0;
  Rational beta;
  Rational length;
};

struct SolveReport {
  std::string instance_id;
  std::string algorithm_id;
  Rational epsilon;
  int k = 0;
  int levels = 0;
  Rational length;
  std::optional<Rational> optimum;
  std::optional<Rational> ratio;
  double millis = 0;
  bool valid = false;
  std::vector<LevelReport> level_reports;
};

struct SolveResult {
  EdgeMultiSet tour;
  SolveReport report;
};

SolveResult SolvePhiTsp(const PhiInstance& inst, const BoostParams& params);
// s == t solves the plain tour problem.
SolveResult SolvePathTsp(const WeightedGraph& graph, int s, int t,
                         const BoostParams& params);

}  // namespace phitsp

#endif  // PHITSP_REDUCTION_H_
