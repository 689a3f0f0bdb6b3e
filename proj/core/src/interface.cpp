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

#include "phitsp/interface.h"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "phitsp/errors.h"

namespace phitsp {

namespace {

void SortParts(std::vector<VertexSet>& parts) {
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.min() < b.min();
            });
}

}  // namespace

// ---------------------------------------------------------------------------
// Interface

Interface::Interface(VertexSet interface_vertices, VertexSet odd_targets,
                     std::vector<VertexSet> parts)
    : interface_vertices_(interface_vertices),
      odd_targets_(odd_targets),
      parts_(std::move(parts)) {
  if (!odd_targets_.IsSubsetOf(interface_vertices_)) {
    throw PreconditionError("T " + odd_targets_.ToString() +
                            " is not a subset of I " +
                            interface_vertices_.ToString());
  }
  if (odd_targets_.size() % 2 != 0) {
    throw PreconditionError("|T| is odd");
  }
  VertexSet covered;
  for (const VertexSet& part : parts_) {
    if (part.empty()) throw PreconditionError("empty part in C");
    if (part.Intersects(covered)) {
      throw PreconditionError("parts of C overlap");
    }
    covered |= part;
  }
  if (covered != interface_vertices_) {
    throw PreconditionError("C does not partition I");
  }
  SortParts(parts_);
}

Interface Interface::Path(int s, int t) {
  if (s == t) throw PreconditionError("path endpoints must differ");
  VertexSet ends{s, t};
  return Interface(ends, ends, {ends});
}

Interface Interface::Relabel(std::span<const int> vertex_map) const {
  auto map_set = [&](const VertexSet& set) {
    VertexSet out;
    for (int v : set) out.insert(vertex_map[v]);
    return out;
  };
  std::vector<VertexSet> parts;
  for (const VertexSet& part : parts_) parts.push_back(map_set(part));
  return Interface(map_set(interface_vertices_), map_set(odd_targets_),
                   std::move(parts));
}

std::string Interface::ToString() const {
  std::ostringstream out;
  out << "I=" << interface_vertices_.ToString()
      << " T=" << odd_targets_.ToString() << " C={";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i].ToString();
  }
  out << '}';
  return out.str();
}

PhiInstance::PhiInstance(WeightedGraph g, Interface p)
    : graph(std::move(g)), phi(std::move(p)) {
  if (!phi.interface_vertices().IsSubsetOf(graph.vertices())) {
    throw PreconditionError("interface vertices outside the graph");
  }
}

// ---------------------------------------------------------------------------
// Tour validation

std::string TourDiagnosis::Describe() const {
  switch (violation) {
    case TourViolation::kNone:
      return "valid";
    case TourViolation::kParity:
      return "parity violation at vertices " + witness.ToString();
    case TourViolation::kContractedDisconnected:
      return "component " + witness.ToString() +
             " is not connected to the interface";
    case TourViolation::kPartSplit:
      return "part " + witness.ToString() + " is split across components";
  }
  return "unknown";
}

TourDiagnosis DiagnosePhiTourWithin(const WeightedGraph& graph,
                                    const VertexSet& within,
                                    const EdgeMultiSet& f,
                                    const Interface& phi) {
  CheckMultiSet(f, graph);
  TourDiagnosis out;
  VertexSet odd;
  internal::UnionFind uf(graph.num_vertices());
  for (int id = 0; id < f.num_edges(); ++id) {
    if (f.count(id) == 0) continue;
    const Edge& e = graph.edge(id);
    if (!e.inside(within)) {
      throw MalformedMultisetError("tour edge " + std::to_string(e.u) + "-" +
                                   std::to_string(e.v) +
                                   " leaves the vertex subset");
    }
    if (f.count(id) % 2) {
      odd ^= VertexSet::Singleton(e.u);
      odd ^= VertexSet::Singleton(e.v);
    }
    uf.Union(e.u, e.v);
  }
  if (odd != phi.odd_targets()) {
    out.violation = TourViolation::kParity;
    out.witness = odd ^ phi.odd_targets();
    return out;
  }

  // Component labels of (W, F); each must meet I unless W is one component.
  std::vector<VertexSet> comps;
  std::vector<int> slot(graph.num_vertices(), -1);
  for (int v : within) {
    int root = uf.Find(v);
    if (slot[root] == -1) {
      slot[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[root]].insert(v);
  }
  if (comps.size() > 1) {
    for (const VertexSet& comp : comps) {
      if (!comp.Intersects(phi.interface_vertices())) {
        out.violation = TourViolation::kContractedDisconnected;
        out.witness = comp;
        return out;
      }
    }
  }
  for (const VertexSet& part : phi.parts()) {
    int root = uf.Find(part.min());
    for (int v : part) {
      if (uf.Find(v) != root) {
        out.violation = TourViolation::kPartSplit;
        out.witness = part;
        return out;
      }
    }
  }
  return out;
}

TourDiagnosis DiagnosePhiTour(const EdgeMultiSet& f, const PhiInstance& inst) {
  return DiagnosePhiTourWithin(inst.graph, inst.graph.vertices(), f, inst.phi);
}

bool IsPhiTour(const EdgeMultiSet& f, const PhiInstance& inst) {
  return DiagnosePhiTour(f, inst).ok();
}

// ---------------------------------------------------------------------------
// Feasibility

std::string Feasibility::Describe() const {
  switch (violated) {
    case FeasibilityCondition::kNone:
      return "feasible";
    case FeasibilityCondition::kOddTargetsInComponent:
      return "component " + witness.ToString() +
             " holds an odd number of T-vertices";
    case FeasibilityCondition::kContractedDisconnected:
      return "G/I is disconnected: component " + witness.ToString() +
             " misses the interface";
    case FeasibilityCondition::kPartSplit:
      return "part " + witness.ToString() + " meets two components";
  }
  return "unknown";
}

Feasibility CheckFeasibilityWithin(const WeightedGraph& graph,
                                   const VertexSet& within,
                                   const Interface& phi) {
  internal::UnionFind uf(graph.num_vertices());
  for (const Edge& e : graph.edges()) {
    if (e.inside(within)) uf.Union(e.u, e.v);
  }
  std::vector<VertexSet> comps;
  std::vector<int> slot(graph.num_vertices(), -1);
  for (int v : within) {
    int root = uf.Find(v);
    if (slot[root] == -1) {
      slot[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[root]].insert(v);
  }

  Feasibility out;
  for (const VertexSet& comp : comps) {
    if ((comp & phi.odd_targets()).size() % 2 != 0) {
      out.feasible = false;
      out.violated = FeasibilityCondition::kOddTargetsInComponent;
      out.witness = comp;
      return out;
    }
  }
  if (comps.size() > 1) {
    for (const VertexSet& comp : comps) {
      if (!comp.Intersects(phi.interface_vertices())) {
        out.feasible = false;
        out.violated = FeasibilityCondition::kContractedDisconnected;
        out.witness = comp;
        return out;
      }
    }
  }
  for (const VertexSet& part : phi.parts()) {
    int root = uf.Find(part.min());
    for (int v : part) {
      if (uf.Find(v) != root) {
        out.feasible = false;
        out.violated = FeasibilityCondition::kPartSplit;
        out.witness = part;
        return out;
      }
    }
  }
  return out;
}

Feasibility CheckFeasibility(const PhiInstance& inst) {
  return CheckFeasibilityWithin(inst.graph, inst.graph.vertices(), inst.phi);
}

// ---------------------------------------------------------------------------
// Induced interfaces and recombination

Interface InduceInterface(const EdgeMultiSet& f, const PhiInstance& inst,
                          const VertexSet& subset) {
  if (TourDiagnosis d = DiagnosePhiTour(f, inst); !d.ok()) {
    throw PreconditionError("InduceInterface needs a Phi-tour: " +
                            d.Describe());
  }
  if (!subset.IsSubsetOf(inst.graph.vertices())) {
    throw PreconditionError("subset outside the graph");
  }
  const WeightedGraph& g = inst.graph;
  VertexSet iw = inst.phi.interface_vertices() & subset;
  for (int id = 0; id < f.num_edges(); ++id) {
    if (f.count(id) == 0) continue;
    const Edge& e = g.edge(id);
    if (e.crosses(subset)) iw.insert(subset.contains(e.u) ? e.u : e.v);
  }
  EdgeMultiSet inner = Restrict(f, g, subset);
  VertexSet tw = OddVertices(inner, g);
  std::vector<VertexSet> parts;
  for (const VertexSet& comp : Components(g, inner, subset)) {
    VertexSet part = comp & iw;
    if (!part.empty()) parts.push_back(part);
  }
  return Interface(iw, tw, std::move(parts));
}

EdgeMultiSet CombinePartial(const EdgeMultiSet& crossing,
                            std::span<const PartialTour> tours,
                            const PhiInstance& inst) {
  const WeightedGraph& g = inst.graph;
  CheckMultiSet(crossing, g);
  VertexSet covered;
  for (const PartialTour& t : tours) {
    if (t.part.Intersects(covered)) {
      throw PreconditionError("parts overlap at " +
                              (t.part & covered).ToString());
    }
    covered |= t.part;
  }
  if (covered != g.vertices()) {
    throw PreconditionError("parts do not cover V; missing " +
                            (g.vertices() - covered).ToString());
  }
  EdgeMultiSet out = crossing;
  for (int id = 0; id < crossing.num_edges(); ++id) {
    if (crossing.count(id) == 0) continue;
    for (const PartialTour& t : tours) {
      if (g.edge(id).inside(t.part)) {
        throw PreconditionError("X edge lies inside part " +
                                t.part.ToString());
      }
    }
  }
  for (const PartialTour& t : tours) {
    CheckMultiSet(t.tour, g);
    for (int id = 0; id < t.tour.num_edges(); ++id) {
      if (t.tour.count(id) > 0 && !g.edge(id).inside(t.part)) {
        throw PreconditionError("partial tour leaves its part " +
                                t.part.ToString());
      }
    }
    out += t.tour;
  }
  return out;
}

InterfaceKey CanonicalKey(const Interface& phi, const VertexSet& subset) {
  InterfaceKey key;
  key.subset = subset.bits();
  key.interface_vertices = phi.interface_vertices().bits();
  key.odd_targets = phi.odd_targets().bits();
  for (const VertexSet& part : phi.parts()) key.parts.push_back(part.bits());
  return key;
}

std::vector<std::vector<VertexSet>> SetPartitions(const VertexSet& vertices) {
  std::vector<int> members = vertices.members();
  std::vector<std::vector<VertexSet>> out;
  std::vector<VertexSet> blocks;
  // Restricted growth: member i joins an existing block or opens a new one.
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == members.size()) {
      out.push_back(blocks);
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].insert(members[i]);
      rec(i + 1);
      blocks[b].erase(members[i]);
    }
    blocks.push_back(VertexSet::Singleton(members[i]));
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

std::vector<Interface> InterfacesOn(const VertexSet& interface_vertices) {
  std::vector<Interface> out;
  auto partitions = SetPartitions(interface_vertices);
  const uint64_t full = interface_vertices.bits();
  // Enumerate T as submasks of I with even popcount.
  uint64_t sub = 0;
  while (true) {
    VertexSet t = VertexSet::FromBits(sub);
    if (t.size() % 2 == 0) {
      for (const auto& parts : partitions) {
        out.emplace_back(interface_vertices, t, parts);
      }
    }
    if (sub == full) break;
    sub = (sub - full) & full;
  }
  return out;
}

}  // namespace phitsp
