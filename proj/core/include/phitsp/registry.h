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

#ifndef PHITSP_REGISTRY_H_
#define PHITSP_REGISTRY_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "phitsp/graph.h"
#include "phitsp/interface.h"

namespace phitsp {

// A TSP algorithm with its claimed approximation factor. run() receives a
// connected graph and returns a tour.
struct TspAlgorithm {
  std::string id;
  Rational guarantee;
  std::function<EdgeMultiSet(const WeightedGraph&)> run;
};

// A Phi-TSP algorithm with its claimed approximation factor. run() receives
// a feasible instance and returns a Phi-tour.
struct PhiAlgorithm {
  std::string id;
  Rational guarantee;
  std::function<EdgeMultiSet(const PhiInstance&)> run;
};

// Known ids: "christofides", "exact-tsp".
TspAlgorithm FindTspAlgorithm(std::string_view id);
// Known ids: "seven-approx", "exact-phi".
PhiAlgorithm FindPhiAlgorithm(std::string_view id);

std::vector<std::string> TspAlgorithmIds();
std::vector<std::string> PhiAlgorithmIds();

}  // namespace phitsp

#endif  // PHITSP_REGISTRY_H_
