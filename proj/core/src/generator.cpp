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

#include "phitsp/generator.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "phitsp/errors.h"

namespace phitsp {
namespace {

int Draw(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

WeightedGraph RandomConnectedGraph(const GenOptions& o, std::mt19937_64& rng) {
  std::vector<int> order(o.n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> used(o.n, std::vector<bool>(o.n, false));
  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    used[u][v] = used[v][u] = true;
    edges.push_back({u, v, Rational(Draw(rng, 1, o.max_length))});
  };
  for (int i = 1; i < o.n; ++i) add(order[i], order[Draw(rng, 0, i - 1)]);
  std::vector<std::pair<int, int>> rest;
  for (int u = 0; u < o.n; ++u) {
    for (int v = u + 1; v < o.n; ++v) {
      if (!used[u][v]) rest.emplace_back(u, v);
    }
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  for (int i = 0; i < o.m - (o.n - 1); ++i) add(rest[i].first, rest[i].second);
  return WeightedGraph(o.n, std::move(edges));
}

Interface RandomInterface(const GenOptions& o, std::mt19937_64& rng) {
  switch (o.mode) {
    case GenMode::kTsp:
      return Interface();
    case GenMode::kPath: {
      int s = Draw(rng, 0, o.n - 1);
      int t = Draw(rng, 0, o.n - 2);
      if (t >= s) ++t;
      return Interface::Path(s, t);
    }
    case GenMode::kPhi:
      break;
  }
  std::vector<int> vertices(o.n);
  std::iota(vertices.begin(), vertices.end(), 0);
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::vector<int> chosen(vertices.begin(), vertices.begin() + o.interface_size);
  VertexSet interface_vertices = VertexSet::FromMembers(chosen);
  std::shuffle(chosen.begin(), chosen.end(), rng);
  VertexSet targets =
      VertexSet::FromMembers(std::span<const int>(chosen.data(), o.num_targets));
  // Each of the first num_parts vertices opens a part; the rest join one.
  std::shuffle(chosen.begin(), chosen.end(), rng);
  std::vector<VertexSet> parts(o.num_parts);
  for (int i = 0; i < o.interface_size; ++i) {
    int part = i < o.num_parts ? i : Draw(rng, 0, o.num_parts - 1);
    parts[part].insert(chosen[i]);
  }
  return Interface(interface_vertices, targets, std::move(parts));
}

}  // namespace

std::optional<GenMode> ParseGenMode(std::string_view name) {
  if (name == "tsp") return GenMode::kTsp;
  if (name == "path") return GenMode::kPath;
  if (name == "phi") return GenMode::kPhi;
  return std::nullopt;
}

PhiInstance GenerateInstance(const GenOptions& o) {
  if (o.n < 1 || o.n > kMaxVertices) {
    throw PreconditionError("n must lie in [1, " + std::to_string(kMaxVertices) + "]");
  }
  const long max_edges = static_cast<long>(o.n) * (o.n - 1) / 2;
  if (o.m < o.n - 1 || o.m > max_edges) {
    throw PreconditionError("m must lie in [n-1, n(n-1)/2] for a connected "
                            "simple graph");
  }
  if (o.max_length < 1) throw PreconditionError("max length must be positive");
  if (o.mode == GenMode::kPath && o.n < 2) {
    throw PreconditionError("path mode needs two vertices");
  }
  if (o.mode == GenMode::kPhi) {
    if (o.interface_size < 0 || o.interface_size > o.n) {
      throw PreconditionError("interface size must lie in [0, n]");
    }
    if (o.num_targets < 0 || o.num_targets > o.interface_size ||
        o.num_targets % 2 != 0) {
      throw PreconditionError("targets must be an even count within I");
    }
    bool parts_ok = o.interface_size == 0
                        ? o.num_parts == 0
                        : o.num_parts >= 1 && o.num_parts <= o.interface_size;
    if (!parts_ok) {
      throw PreconditionError("part count must lie in [1, |I|], or be 0 when I is empty");
    }
  }
  std::mt19937_64 rng(o.seed);
  for (int attempt = 0; attempt <= o.max_retries; ++attempt) {
    WeightedGraph graph = RandomConnectedGraph(o, rng);
    Interface phi = RandomInterface(o, rng);
    PhiInstance inst(std::move(graph), std::move(phi));
    if (CheckFeasibility(inst).feasible) return inst;
  }
  throw PreconditionError("no feasible instance within the retry budget");
}

}  // namespace phitsp
