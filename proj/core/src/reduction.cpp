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

#include "phitsp/reduction.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "phitsp/errors.h"

namespace phitsp {
namespace {

void RequireFeasible(const PhiInstance& inst) {
  Feasibility feasibility = CheckFeasibility(inst);
  if (!feasibility.feasible) throw InfeasibleError(feasibility.Describe());
}

// Keeps the shorter tour; equal lengths fall back to the multiset order.
void KeepBest(std::optional<std::pair<Rational, EdgeMultiSet>>& best,
              EdgeMultiSet candidate, const WeightedGraph& graph) {
  Rational length = candidate.Length(graph);
  if (!best || length < best->first ||
      (length == best->first && candidate < best->second)) {
    best.emplace(std::move(length), std::move(candidate));
  }
}

EdgeMultiSet Shorter(EdgeMultiSet a, EdgeMultiSet b, const WeightedGraph& graph) {
  Rational la = a.Length(graph);
  Rational lb = b.Length(graph);
  if (lb < la || (lb == la && b < a)) return b;
  return a;
}

}  // namespace

EdgeMultiSet SimplePhi(const PhiInstance& inst, const TspAlgorithm& tsp,
                       const JoinResult& join) {
  RequireFeasible(inst);
  const WeightedGraph& graph = inst.graph;
  if (OddVertices(join.join, graph) != inst.phi.odd_targets()) {
    throw PreconditionError("J is not a T-join of the instance");
  }
  EdgeMultiSet tour = join.join;
  for (const VertexSet& component : Components(graph)) {
    if (component.size() < 2) continue;
    InducedSubgraph sub = Induced(graph, component);
    tour += sub.ToHost(tsp.run(sub.graph));
  }
  return tour;
}

EdgeMultiSet ShortTJoinAlgo(const PhiInstance& inst, const TspAlgorithm& tsp,
                            const Rational& delta,
                            const ShortJoinOptions& options) {
  if (delta <= 0) throw PreconditionError("delta must be positive");
  RequireFeasible(inst);
  const WeightedGraph& graph = inst.graph;
  const int m = graph.num_edges();
  const JoinResult join = ShortestTJoin(graph, inst.phi.odd_targets());
  const long budget = std::min<long>(
      m, Floor(Rational(2 * inst.phi.size()) / delta).get_si());

  // Threshold sets, from the empty set up to all of E.
  std::vector<Rational> thresholds;
  for (const Edge& e : graph.edges()) thresholds.push_back(e.length);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  std::reverse(thresholds.begin(), thresholds.end());

  std::set<std::vector<bool>> tried;
  std::optional<std::pair<Rational, EdgeMultiSet>> best;
  auto run_with_deleted = [&](const std::vector<bool>& deleted) {
    if (!tried.insert(deleted).second) return;
    if (static_cast<long>(tried.size()) > options.enumeration_cap) {
      throw SizeCapError("heavy-edge guessing exceeded " +
                         std::to_string(options.enumeration_cap) +
                         " deletion sets");
    }
    std::vector<bool> keep(m);
    for (int e = 0; e < m; ++e) keep[e] = !deleted[e];
    EdgeSubgraph sub = KeepEdges(graph, keep);
    PhiInstance reduced(sub.graph, inst.phi);
    if (!CheckFeasibility(reduced).feasible) return;
    std::vector<int> local_of(m, -1);
    for (int i = 0; i < sub.graph.num_edges(); ++i) local_of[sub.to_host_edge[i]] = i;
    JoinResult local_join{EdgeMultiSet::Empty(sub.graph), join.length};
    for (int e : join.join.Support()) local_join.join.Add(local_of[e], join.join.count(e));
    KeepBest(best, sub.ToHost(SimplePhi(reduced, tsp, local_join), m), graph);
  };

  run_with_deleted(std::vector<bool>(m, false));  // H empty
  for (const Rational& threshold : thresholds) {
    std::vector<int> heavy;  // H minus J
    for (int e = 0; e < m; ++e) {
      if (graph.edge(e).length >= threshold && join.join.count(e) == 0) {
        heavy.push_back(e);
      }
    }
    // Every kept subset of heavy with at most budget members.
    std::vector<bool> deleted(m, false);
    for (int e : heavy) deleted[e] = true;
    std::function<void(size_t, long)> choose = [&](size_t next, long kept) {
      if (next == heavy.size()) {
        run_with_deleted(deleted);
        return;
      }
      choose(next + 1, kept);
      if (kept < budget) {
        deleted[heavy[next]] = false;
        choose(next + 1, kept + 1);
        deleted[heavy[next]] = true;
      }
    };
    choose(0, 0);
  }
  return std::move(best->second);
}

EdgeMultiSet LongTJoinAlgo(const PhiInstance& inst, const PhiAlgorithm& base,
                           const Rational& delta, const DpOptions& options,
                           std::optional<int> k_override) {
  if (delta <= 0) throw PreconditionError("delta must be positive");
  RequireFeasible(inst);
  if (inst.phi.odd_targets().empty()) return base.run(inst);
  LaminarFamily family =
      BuildLaminarFamily(inst.graph, inst.phi.odd_targets());
  int k = k_override ? *k_override : static_cast<int>(Floor(1 / delta).get_si());
  return DpGuess(inst, family, k, base, options);
}

Rational BoostFactor(const Rational& alpha, const Rational& beta,
                     const Rational& epsilon) {
  Rational first = (1 + epsilon) * alpha;
  Rational second = beta - epsilon / 8 * (beta - 1);
  return std::max(first, second);
}

EdgeMultiSet BoostOnce(const PhiInstance& inst, const TspAlgorithm& tsp,
                       const PhiAlgorithm& base, const Rational& epsilon,
                       const BoostOptions& options) {
  if (epsilon <= 0 || epsilon > 1) {
    throw PreconditionError("epsilon must lie in (0, 1]");
  }
  EdgeMultiSet first = ShortTJoinAlgo(inst, tsp, epsilon / 2, options.short_join);
  EdgeMultiSet second =
      LongTJoinAlgo(inst, base, epsilon / 8, options.dp, options.dp_k);
  return Shorter(std::move(first), std::move(second), inst.graph);
}

BoostSchedule MakeBoostSchedule(int k, const Rational& epsilon,
                                const Rational& alpha, const Rational& beta0) {
  if (alpha <= 1) throw PreconditionError("schedule requires alpha > 1");
  if (epsilon <= 0) throw PreconditionError("schedule requires epsilon > 0");
  if (beta0 < alpha + epsilon) {
    throw PreconditionError("schedule requires beta0 >= alpha + epsilon");
  }
  if (k < 0) throw PreconditionError("schedule requires k >= 0");
  BoostSchedule schedule;
  schedule.epsilon_prime = epsilon / alpha;
  Rational steps = (beta0 - (alpha + epsilon)) / (alpha - 1) * (8 * alpha / epsilon);
  schedule.num_levels = static_cast<int>(Ceil(steps).get_si());

  Rational growth = 9 / schedule.epsilon_prime;
  Rational k_level = k;  // filled from the top level downwards
  std::vector<Rational> ks(schedule.num_levels + 1);
  for (int i = schedule.num_levels; i >= 0; --i) {
    ks[i] = k_level;
    k_level *= growth;
  }
  Rational beta = beta0;
  for (int i = 0; i <= schedule.num_levels; ++i) {
    if (i > 0) {
      beta = std::max<Rational>(
          alpha + epsilon,
          beta - schedule.epsilon_prime / 8 * (beta - 1));
    }
    schedule.levels.push_back({i, beta, ks[i]});
  }
  return schedule;
}

SolveResult SolvePhiTsp(const PhiInstance& inst, const BoostParams& params) {
  const auto start = std::chrono::steady_clock::now();
  if (params.epsilon <= 0 || params.epsilon > 1) {
    throw PreconditionError("epsilon must lie in (0, 1]");
  }
  if (params.max_boost_iters < 0) {
    throw PreconditionError("max_boost_iters must be non-negative");
  }
  if (inst.phi.size() > params.k_interface_cap) {
    throw PreconditionError("interface has " + std::to_string(inst.phi.size()) +
                            " vertices, above the cap of " +
                            std::to_string(params.k_interface_cap));
  }
  RequireFeasible(inst);
  const TspAlgorithm tsp = FindTspAlgorithm(params.tsp_algorithm);
  const PhiAlgorithm base = FindPhiAlgorithm(params.base_algorithm);
  const Rational alpha = params.alpha.value_or(tsp.guarantee);
  const Rational beta0 = params.beta.value_or(base.guarantee);

  // Levels and per-level epsilon. With an exact TSP algorithm the schedule
  // has no finite length, so the level cap alone decides.
  int levels = params.max_boost_iters;
  Rational epsilon_prime = params.epsilon;
  if (alpha > 1) {
    epsilon_prime = params.epsilon / alpha;
    if (beta0 >= alpha + params.epsilon) {
      BoostSchedule schedule = MakeBoostSchedule(
          params.k_interface_cap, params.epsilon, alpha, beta0);
      levels = std::min(levels, schedule.num_levels);
    } else {
      levels = 0;
    }
  }

  BoostOptions options = params.options;
  if (params.dp_k > 0) options.dp_k = params.dp_k;

  std::vector<PhiAlgorithm> stack{base};
  stack.back().guarantee = beta0;
  for (int i = 1; i <= levels; ++i) {
    PhiAlgorithm below = stack.back();
    PhiAlgorithm level;
    level.id = "boost-" + std::to_string(i);
    level.guarantee = BoostFactor(alpha, below.guarantee, epsilon_prime);
    level.run = [tsp, below, epsilon_prime, options](const PhiInstance& sub) {
      return BoostOnce(sub, tsp, below, epsilon_prime, options);
    };
    stack.push_back(std::move(level));
  }

  SolveResult result;
  SolveReport& report = result.report;
  for (int i = 0; i <= levels; ++i) {
    EdgeMultiSet tour = stack[i].run(inst);
    report.level_reports.push_back({i, stack[i].guarantee, tour.Length(inst.graph)});
    if (i == levels) result.tour = std::move(tour);
  }
  report.algorithm_id =
      levels == 0 ? base.id : "boost(" + tsp.id + "," + base.id + ")";
  report.epsilon = params.epsilon;
  report.k = params.k_interface_cap;
  report.levels = levels;
  report.length = result.tour.Length(inst.graph);
  report.valid = IsPhiTour(result.tour, inst);
  report.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (!report.valid) throw Error("solver produced an invalid Phi-tour");
  return result;
}

SolveResult SolvePathTsp(const WeightedGraph& graph, int s, int t,
                         const BoostParams& params) {
  const int n = graph.num_vertices();
  if (s < 0 || s >= n || t < 0 || t >= n) {
    throw PreconditionError("path endpoints out of range");
  }
  if (s == t) return SolvePhiTsp(PhiInstance(graph, Interface()), params);
  return SolvePhiTsp(PhiInstance(graph, Interface::Path(s, t)), params);
}

}  // namespace phitsp
