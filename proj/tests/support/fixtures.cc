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

#include "support/fixtures.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace phitsp::testing {

WeightedGraph UnitGraph(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, Rational(1)});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph Complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return UnitGraph(n, pairs);
}

WeightedGraph UnitPath(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return UnitGraph(n, pairs);
}

WeightedGraph UnitCycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  pairs.emplace_back(0, n - 1);
  return UnitGraph(n, pairs);
}

WeightedGraph TwoTriangles() {
  return UnitGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

std::vector<WeightedGraph> GraphsUpToIsomorphism(int n, bool connected_only) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<int> slot_of(n * n);
  for (size_t i = 0; i < slots.size(); ++i) {
    slot_of[slots[i].first * n + slots[i].second] = static_cast<int>(i);
    slot_of[slots[i].second * n + slots[i].first] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<uint32_t> seen;
  std::vector<WeightedGraph> out;
  for (uint32_t mask = 0; mask < (uint32_t{1} << slots.size()); ++mask) {
    uint32_t canonical = mask;
    for (const auto& p : perms) {
      uint32_t image = 0;
      for (size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1u) {
          image |= uint32_t{1} << slot_of[p[slots[i].first] * n + p[slots[i].second]];
        }
      }
      canonical = std::min(canonical, image);
    }
    if (!seen.insert(canonical).second) continue;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < slots.size(); ++i) {
      if (canonical >> i & 1u) pairs.push_back(slots[i]);
    }
    WeightedGraph graph = UnitGraph(n, pairs);
    if (connected_only && Components(graph).size() != 1) continue;
    out.push_back(std::move(graph));
  }
  return out;
}

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Interface RandomInterface(std::mt19937_64& rng, int n) {
  VertexSet interface_vertices;
  for (int v = 0; v < n; ++v) {
    if (Uniform(rng, 0, 1)) interface_vertices.insert(v);
  }
  VertexSet targets;
  for (int v : interface_vertices) {
    if (Uniform(rng, 0, 1)) targets.insert(v);
  }
  if (targets.size() % 2 == 1) targets.erase(targets.min());
  return Interface(interface_vertices, targets,
                   RandomPartition(rng, interface_vertices,
                                   std::max(1, interface_vertices.size())));
}

GenOptions RandomGenOptions(std::mt19937_64& rng, int n_lo, int n_hi,
                            GenMode mode, int max_interface) {
  GenOptions o;
  o.n = Uniform(rng, n_lo, n_hi);
  const int max_m = std::min(o.n * (o.n - 1) / 2, o.n + 3);
  o.m = Uniform(rng, o.n - 1, max_m);
  o.max_length = Uniform(rng, 1, 9);
  o.seed = rng();
  o.mode = mode;
  if (mode == GenMode::kPhi) {
    o.interface_size = Uniform(rng, 0, std::min(max_interface, o.n));
    o.num_targets = 2 * Uniform(rng, 0, o.interface_size / 2);
    o.num_parts = o.interface_size == 0 ? 0 : Uniform(rng, 1, o.interface_size);
  }
  return o;
}

std::vector<VertexSet> RandomPartition(std::mt19937_64& rng, const VertexSet& set,
                                       int max_parts) {
  std::vector<VertexSet> parts;
  if (set.empty()) return parts;
  const int count = Uniform(rng, 1, std::min(max_parts, set.size()));
  std::vector<int> members = set.members();
  std::shuffle(members.begin(), members.end(), rng);
  parts.resize(count);
  for (size_t i = 0; i < members.size(); ++i) {
    int part = static_cast<int>(i) < count ? static_cast<int>(i)
                                           : Uniform(rng, 0, count - 1);
    parts[part].insert(members[i]);
  }
  return parts;
}

LaminarFamily RandomLaminarFamily(std::mt19937_64& rng, int n, int max_width) {
  // Grow a random chain inside each of a few disjoint seeds.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int width = Uniform(rng, 0, std::min(max_width, n));
  LaminarFamily family;
  std::vector<VertexSet> tops;
  int next = 0;
  for (int w = 0; w < width && next < n; ++w) {
    VertexSet set = VertexSet::Singleton(order[next++]);
    family.sets.push_back(set);
    while (next < n && Uniform(rng, 0, 2) == 0) {
      set.insert(order[next++]);
      family.sets.push_back(set);
    }
    tops.push_back(set);
  }
  // Occasionally wrap two chains in a common superset.
  if (tops.size() >= 2 && Uniform(rng, 0, 1)) {
    VertexSet merged = tops[0] | tops[1];
    if (merged != VertexSet::Range(n)) family.sets.push_back(merged);
  }
  std::sort(family.sets.begin(), family.sets.end());
  family.sets.erase(std::unique(family.sets.begin(), family.sets.end()),
                    family.sets.end());
  return family;
}

EdgeMultiSet AddRandomPairs(std::mt19937_64& rng, EdgeMultiSet f, int max_pairs) {
  if (f.num_edges() == 0) return f;
  const int pairs = Uniform(rng, 0, max_pairs);
  for (int i = 0; i < pairs; ++i) f.Add(Uniform(rng, 0, f.num_edges() - 1), 2);
  return f;
}

}  // namespace phitsp::testing
