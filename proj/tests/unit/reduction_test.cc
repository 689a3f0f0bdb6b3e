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

#include <gtest/gtest.h>

#include <random>

#include "phitsp/approx.h"
#include "phitsp/errors.h"
#include "phitsp/generator.h"
#include "phitsp/join.h"
#include "phitsp/laminar.h"
#include "phitsp/oracle.h"
#include "phitsp/reduction.h"
#include "phitsp/registry.h"
#include "support/fixtures.h"

namespace phitsp {
namespace {

const TspAlgorithm& ExactTspAlgo() {
  static const TspAlgorithm algo = FindTspAlgorithm("exact-tsp");
  return algo;
}
const PhiAlgorithm& SevenApprox() {
  static const PhiAlgorithm algo = FindPhiAlgorithm("seven-approx");
  return algo;
}

PhiInstance UnitPathInstance() {
  return PhiInstance(testing::UnitPath(4), Interface::Path(0, 3));
}

// Unit triangle {0,1,2} and unit edge 3-4 joined by a heavy edge 2-3.
PhiInstance HeavyBridgeInstance() {
  WeightedGraph g(5, {{0, 1, Rational(1)},
                      {0, 2, Rational(1)},
                      {1, 2, Rational(1)},
                      {2, 3, Rational(100)},
                      {3, 4, Rational(1)}});
  return PhiInstance(g, Interface(VertexSet{0, 3}, VertexSet(),
                                  {VertexSet{0}, VertexSet{3}}));
}

std::vector<PhiInstance> SmallInstances(uint64_t seed, int count, int n_max) {
  std::mt19937_64 rng(seed);
  std::vector<PhiInstance> out;
  while (static_cast<int>(out.size()) < count) {
    GenMode mode = testing::Uniform(rng, 0, 1) ? GenMode::kPath : GenMode::kPhi;
    GenOptions options = testing::RandomGenOptions(rng, 2, n_max, mode, 2);
    options.max_length = 4;
    out.push_back(GenerateInstance(options));
  }
  return out;
}

TEST(SimplePhiTest, EmptyInterfaceIsTspTour) {
  PhiInstance inst(testing::UnitCycle(5), Interface());
  JoinResult none{EdgeMultiSet::Empty(inst.graph), Rational(0)};
  EXPECT_EQ(SimplePhi(inst, ExactTspAlgo(), none), ExactTsp(inst.graph));
}

TEST(SimplePhiTest, CompleteFourWithExactTsp) {
  PhiInstance inst(testing::Complete(4), Interface::Path(0, 1));
  JoinResult join = ShortestTJoin(inst.graph, inst.phi.odd_targets());
  EdgeMultiSet f = SimplePhi(inst, ExactTspAlgo(), join);
  EXPECT_EQ(f.Length(inst.graph), 5);
  EXPECT_TRUE(IsPhiTour(f, inst));
}

TEST(SimplePhiTest, TwoComponentsGetSeparateTours) {
  WeightedGraph g = testing::TwoTriangles();
  PhiInstance inst(g, Interface(VertexSet{0, 3}, VertexSet(),
                                {VertexSet{0}, VertexSet{3}}));
  JoinResult none{EdgeMultiSet::Empty(g), Rational(0)};
  EdgeMultiSet f = SimplePhi(inst, ExactTspAlgo(), none);
  EXPECT_EQ(f.Length(g), 6);
  EXPECT_TRUE(IsPhiTour(f, inst));
}

TEST(SimplePhiTest, InfeasibleThrows) {
  PhiInstance inst(testing::TwoTriangles(), Interface());
  JoinResult none{EdgeMultiSet::Empty(inst.graph), Rational(0)};
  EXPECT_THROW(SimplePhi(inst, ExactTspAlgo(), none), InfeasibleError);
}

TEST(ShortTJoinAlgoTest, EmptyInterface) {
  PhiInstance inst(testing::UnitCycle(5), Interface());
  EdgeMultiSet f = ShortTJoinAlgo(inst, ExactTspAlgo(), Rational(1));
  EXPECT_EQ(f.Length(inst.graph), 5);
}

TEST(ShortTJoinAlgoTest, CompleteFourBound) {
  PhiInstance inst(testing::Complete(4), Interface::Path(0, 1));
  EdgeMultiSet f = ShortTJoinAlgo(inst, ExactTspAlgo(), Rational(1));
  EXPECT_TRUE(IsPhiTour(f, inst));
  EXPECT_LE(f.Length(inst.graph), 8);
}

TEST(ShortTJoinAlgoTest, DeletingHeavyEdgeHelps) {
  PhiInstance inst = HeavyBridgeInstance();
  JoinResult none{EdgeMultiSet::Empty(inst.graph), Rational(0)};
  EXPECT_EQ(SimplePhi(inst, ExactTspAlgo(), none).Length(inst.graph), 205);
  EdgeMultiSet f = ShortTJoinAlgo(inst, ExactTspAlgo(), Rational(1));
  EXPECT_TRUE(IsPhiTour(f, inst));
  EXPECT_EQ(f.Length(inst.graph), 5);
  EXPECT_EQ(OraclePhiOpt(inst).optimum, 5);
}

TEST(ShortTJoinAlgoTest, EnumerationCap) {
  PhiInstance inst(testing::Complete(6), Interface::Path(0, 1));
  ShortJoinOptions options;
  options.enumeration_cap = 3;
  EXPECT_THROW(ShortTJoinAlgo(inst, ExactTspAlgo(), Rational(1, 4), options),
               SizeCapError);
}

TEST(ShortTJoinAlgoTest, BoundAgainstOracle) {
  for (const PhiInstance& inst : SmallInstances(43, 30, 6)) {
    Rational opt = OraclePhiOpt(inst).optimum;
    Rational join = ShortestTJoin(inst.graph, inst.phi.odd_targets()).length;
    for (Rational delta : {Rational(1), Rational(1, 2)}) {
      EdgeMultiSet f = ShortTJoinAlgo(inst, ExactTspAlgo(), delta);
      EXPECT_TRUE(IsPhiTour(f, inst));
      EXPECT_LE(f.Length(inst.graph), (1 + delta) * opt + 2 * join);
    }
  }
}

TEST(DpGuessTest, EmptyFamilyReturnsBase) {
  PhiInstance inst(testing::Complete(4), Interface::Path(0, 1));
  EdgeMultiSet f = DpGuess(inst, LaminarFamily{}, 1, SevenApprox());
  EXPECT_EQ(f, SevenApproxPhi(inst));
}

TEST(DpGuessTest, UnitPathChainFindsOptimum) {
  PhiInstance inst = UnitPathInstance();
  LaminarFamily chain{{VertexSet{0}, VertexSet{0, 1}, VertexSet{0, 1, 2}}};
  DpStats stats;
  EdgeMultiSet f = DpGuess(inst, chain, 1, SevenApprox(), {}, &stats);
  EXPECT_TRUE(IsPhiTour(f, inst));
  EXPECT_EQ(f.Length(inst.graph), 3);
  EXPECT_GT(stats.cells, 0);
  EXPECT_GT(stats.base_calls, 0);
}

TEST(DpGuessTest, ZeroGuessesStayWithinBase) {
  for (const PhiInstance& inst : SmallInstances(47, 15, 5)) {
    LaminarFamily family = BuildLaminarFamily(inst.graph, inst.phi.odd_targets());
    EdgeMultiSet f = DpGuess(inst, family, 0, SevenApprox());
    EXPECT_TRUE(IsPhiTour(f, inst));
    EXPECT_LE(f.Length(inst.graph), 7 * OraclePhiOpt(inst).optimum);
  }
}

TEST(DpGuessTest, ExactBaseWithEmptyFamilyIsOptimal) {
  PhiAlgorithm exact = FindPhiAlgorithm("exact-phi");
  for (const PhiInstance& inst : SmallInstances(53, 10, 5)) {
    EXPECT_EQ(DpGuess(inst, LaminarFamily{}, 1, exact).Length(inst.graph),
              OraclePhiOpt(inst).optimum);
  }
}

TEST(DpGuessTest, NodeCap) {
  PhiInstance inst = UnitPathInstance();
  LaminarFamily chain{{VertexSet{0}, VertexSet{0, 1}, VertexSet{0, 1, 2}}};
  DpOptions options;
  options.node_cap = 1;
  EXPECT_THROW(DpGuess(inst, chain, 1, SevenApprox(), options), SizeCapError);
}

TEST(LongTJoinAlgoTest, EmptyTargetsCallsBase) {
  PhiInstance inst(testing::UnitCycle(4), Interface());
  EXPECT_EQ(LongTJoinAlgo(inst, SevenApprox(), Rational(1, 8)), SevenApproxPhi(inst));
}

TEST(LongTJoinAlgoTest, UnitPathMatchesDp) {
  PhiInstance inst = UnitPathInstance();
  EXPECT_EQ(LongTJoinAlgo(inst, SevenApprox(), Rational(1)).Length(inst.graph), 3);
}

TEST(LongTJoinAlgoTest, BoundAgainstOracle) {
  for (const PhiInstance& inst : SmallInstances(59, 15, 5)) {
    Rational opt = OraclePhiOpt(inst).optimum;
    Rational join = ShortestTJoin(inst.graph, inst.phi.odd_targets()).length;
    Rational delta(1);
    EdgeMultiSet f = LongTJoinAlgo(inst, SevenApprox(), delta);
    EXPECT_TRUE(IsPhiTour(f, inst));
    EXPECT_LE(f.Length(inst.graph), (7 + delta * 6) * opt - 6 * join);
  }
}

TEST(BoostFactorTest, Arithmetic) {
  EXPECT_EQ(BoostFactor(Rational(3, 2), Rational(4), Rational(1)), Rational(29, 8));
  EXPECT_EQ(BoostFactor(Rational(3, 2), Rational(4), Rational(1, 10)),
            Rational(317, 80));
}

TEST(BoostOnceTest, EmptyTargetsWithinTspFactor) {
  for (const PhiInstance& inst : SmallInstances(61, 10, 6)) {
    if (!inst.phi.odd_targets().empty()) continue;
    EdgeMultiSet f = BoostOnce(inst, ExactTspAlgo(), SevenApprox(), Rational(1));
    EXPECT_LE(f.Length(inst.graph), 2 * OraclePhiOpt(inst).optimum);
  }
  PhiInstance tsp(testing::UnitCycle(5), Interface());
  EXPECT_EQ(BoostOnce(tsp, ExactTspAlgo(), SevenApprox(), Rational(1)).Length(tsp.graph), 5);
}

TEST(BoostScheduleTest, LevelCount) {
  BoostSchedule s = MakeBoostSchedule(2, Rational(1, 2), Rational(3, 2), Rational(4));
  EXPECT_EQ(s.num_levels, 96);
  EXPECT_EQ(s.epsilon_prime, Rational(1, 3));
  ASSERT_EQ(s.levels.size(), 97u);
  EXPECT_EQ(s.levels.back().k, 2);
  EXPECT_EQ(s.levels.back().beta, 2);
}

TEST(BoostScheduleTest, InterfaceGrowth) {
  BoostSchedule s = MakeBoostSchedule(2, Rational(1), Rational(3, 2), Rational(4));
  EXPECT_EQ(s.epsilon_prime, Rational(2, 3));
  for (int i = 1; i < static_cast<int>(s.levels.size()); ++i) {
    EXPECT_EQ(s.levels[i - 1].k, Rational(27, 2) * s.levels[i].k);
  }
}

TEST(BoostScheduleTest, FixedPoint) {
  BoostSchedule s = MakeBoostSchedule(2, Rational(1, 2), Rational(3, 2), Rational(2));
  for (const ScheduleLevel& level : s.levels) EXPECT_EQ(level.beta, 2);
}

TEST(BoostScheduleTest, RejectsBadParameters) {
  EXPECT_THROW(MakeBoostSchedule(2, Rational(1), Rational(1), Rational(4)),
               PreconditionError);
  EXPECT_THROW(MakeBoostSchedule(2, Rational(0), Rational(3, 2), Rational(4)),
               PreconditionError);
  EXPECT_THROW(MakeBoostSchedule(2, Rational(1), Rational(3, 2), Rational(2)),
               PreconditionError);
}

TEST(SolveTest, NoLevelsIsSevenApprox) {
  PhiInstance inst(testing::Complete(4), Interface::Path(0, 1));
  BoostParams params;
  params.max_boost_iters = 0;
  SolveResult r = SolvePhiTsp(inst, params);
  EXPECT_EQ(r.tour, SevenApproxPhi(inst));
  EXPECT_EQ(r.report.levels, 0);
  EXPECT_EQ(r.report.algorithm_id, "seven-approx");
}

TEST(SolveTest, CompleteFourPathWithExactOracles) {
  BoostParams params;
  params.tsp_algorithm = "exact-tsp";
  params.base_algorithm = "exact-phi";
  SolveResult r = SolvePathTsp(testing::Complete(4), 0, 1, params);
  EXPECT_EQ(r.report.length, 3);
  EXPECT_TRUE(r.report.valid);
}

TEST(SolveTest, UnitCyclePathWithinBoostFactor) {
  WeightedGraph g = testing::UnitCycle(5);
  BoostParams params;
  SolveResult r = SolvePathTsp(g, 0, 2, params);
  EXPECT_EQ(OddVertices(r.tour, g), (VertexSet{0, 2}));
  Rational opt = OraclePathTsp(g, 0, 2).optimum;
  EXPECT_LE(r.report.length, BoostFactor(Rational(3, 2), Rational(7), Rational(1)) * opt);
}

TEST(SolveTest, EqualEndsSolvesTour) {
  WeightedGraph g = testing::UnitCycle(5);
  BoostParams params;
  SolveResult r = SolvePathTsp(g, 2, 2, params);
  EXPECT_TRUE(OddVertices(r.tour, g).empty());
  EXPECT_EQ(r.report.length, 5);
}

TEST(SolveTest, InterfaceCapAndInfeasible) {
  BoostParams params;
  params.k_interface_cap = 1;
  PhiInstance inst(testing::Complete(4), Interface::Path(0, 1));
  EXPECT_THROW(SolvePhiTsp(inst, params), PreconditionError);
  EXPECT_THROW(SolvePhiTsp(PhiInstance(testing::TwoTriangles(), Interface()),
                           BoostParams{}),
               InfeasibleError);
}

}  // namespace
}  // namespace phitsp
