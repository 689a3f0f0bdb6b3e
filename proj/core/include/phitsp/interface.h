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

#ifndef PHITSP_INTERFACE_H_
#define PHITSP_INTERFACE_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "phitsp/graph.h"

namespace phitsp {

// An interface (I, T, C) of a graph: interface vertices I, odd-degree
// targets T with T a subset of I and |T| even, and a partition C of I.
//
// Always held in canonical form: parts ordered by smallest member. Two
// interfaces compare equal iff they are the same triple.
class Interface {
 public:
  // The empty interface (plain TSP).
  Interface() = default;
  // Throws PreconditionError unless T is a subset of I, |T| is even and the
  // parts are non-empty, pairwise disjoint and cover I.
  Interface(VertexSet interface_vertices, VertexSet odd_targets,
            std::vector<VertexSet> parts);

  // I = T = {s, t}, C = {{s, t}}; requires s != t.
  static Interface Path(int s, int t);

  const VertexSet& interface_vertices() const { return interface_vertices_; }
  const VertexSet& odd_targets() const { return odd_targets_; }
  std::span<const VertexSet> parts() const { return parts_; }
  int size() const { return interface_vertices_.size(); }
  bool empty() const { return interface_vertices_.empty(); }

  // Same triple expressed with other vertex ids.
  Interface Relabel(std::span<const int> vertex_map) const;

  // "I={0,1} T={0,1} C={{0,1}}".
  std::string ToString() const;

  auto operator<=>(const Interface&) const = default;

 private:
  VertexSet interface_vertices_;
  VertexSet odd_targets_;
  std::vector<VertexSet> parts_;
};

// A Phi-TSP instance. Construction checks that the interface lives on the
// graph's vertices.
struct PhiInstance {
  PhiInstance() = default;
  PhiInstance(WeightedGraph g, Interface p);

  WeightedGraph graph;
  Interface phi;
};

enum class TourViolation {
  kNone,
  kParity,                  // odd(F) != T
  kContractedDisconnected,  // (V, F)/I not connected
  kPartSplit,               // some C spans two components of (V, F)
};

struct TourDiagnosis {
  TourViolation violation = TourViolation::kNone;
  // Parity: odd(F) xor T. Disconnected: a component missing I.
  // Part split: the offending part.
  VertexSet witness;

  bool ok() const { return violation == TourViolation::kNone; }
  std::string Describe() const;
};

TourDiagnosis DiagnosePhiTour(const EdgeMultiSet& f, const PhiInstance& inst);
bool IsPhiTour(const EdgeMultiSet& f, const PhiInstance& inst);

// Phi-tour test for the subgraph G[W] without relabeling: f is a host
// multiset that must lie inside E[W] and phi lives on W.
TourDiagnosis DiagnosePhiTourWithin(const WeightedGraph& graph,
                                    const VertexSet& within,
                                    const EdgeMultiSet& f,
                                    const Interface& phi);

enum class FeasibilityCondition {
  kNone,
  kOddTargetsInComponent,  // a component of G holds an odd number of T
  kContractedDisconnected,  // G/I is disconnected
  kPartSplit,               // a part of C meets two components of G
};

struct Feasibility {
  bool feasible = true;
  FeasibilityCondition violated = FeasibilityCondition::kNone;
  VertexSet witness;

  std::string Describe() const;
};

// Decides whether the instance admits a Phi-tour, in O(n + m).
Feasibility CheckFeasibility(const PhiInstance& inst);
// Same for (G[W], phi) without relabeling.
Feasibility CheckFeasibilityWithin(const WeightedGraph& graph,
                                   const VertexSet& within,
                                   const Interface& phi);

// The interface that the Phi-tour f induces on W (host ids): boundary
// endpoints join I, T becomes odd(F[W]) and C groups I_W by the components
// of (W, F[W]). Throws PreconditionError if f is not a Phi-tour.
Interface InduceInterface(const EdgeMultiSet& f, const PhiInstance& inst,
                          const VertexSet& subset);

struct PartialTour {
  VertexSet part;
  EdgeMultiSet tour;  // host edge ids, inside E[part]
};

// X plus the multi-union of the partial tours. Checks that the parts
// partition V, that each tour stays inside its part and that X only uses
// edges crossing between parts; makes no claim that the result is a tour.
EdgeMultiSet CombinePartial(const EdgeMultiSet& crossing,
                            std::span<const PartialTour> tours,
                            const PhiInstance& inst);

// Memo key of a DP cell (L, Phi_L).
struct InterfaceKey {
  uint64_t subset = 0;
  uint64_t interface_vertices = 0;
  uint64_t odd_targets = 0;
  std::vector<uint64_t> parts;

  auto operator<=>(const InterfaceKey&) const = default;
};
InterfaceKey CanonicalKey(const Interface& phi, const VertexSet& subset);

// Every set partition of the given vertices, each in canonical order.
std::vector<std::vector<VertexSet>> SetPartitions(const VertexSet& vertices);

// Every interface (I, T, C) with the given I.
std::vector<Interface> InterfacesOn(const VertexSet& interface_vertices);

}  // namespace phitsp

#endif  // PHITSP_INTERFACE_H_
