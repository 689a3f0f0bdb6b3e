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

#include "phitsp/registry.h"

#include "phitsp/approx.h"
#include "phitsp/errors.h"
#include "phitsp/oracle.h"

namespace phitsp {
namespace {

std::vector<TspAlgorithm> TspTable() {
  return {
      {"christofides", Rational(3, 2), ChristofidesTsp},
      {"exact-tsp", Rational(1), ExactTsp},
  };
}

EdgeMultiSet ExactPhi(const PhiInstance& inst) {
  OracleResult result = OraclePhiOpt(inst);
  if (!result.feasible) throw InfeasibleError("instance admits no Phi-tour");
  return result.witness;
}

std::vector<PhiAlgorithm> PhiTable() {
  return {
      {"seven-approx", Rational(7), SevenApproxPhi},
      {"exact-phi", Rational(1), ExactPhi},
  };
}

template <typename Table>
std::string Known(const Table& table) {
  std::string known;
  for (const auto& entry : table) {
    if (!known.empty()) known += ", ";
    known += entry.id;
  }
  return known;
}

}  // namespace

TspAlgorithm FindTspAlgorithm(std::string_view id) {
  auto table = TspTable();
  for (auto& entry : table) {
    if (entry.id == id) return entry;
  }
  throw PreconditionError("unknown TSP algorithm '" + std::string(id) +
                          "' (known: " + Known(table) + ")");
}

PhiAlgorithm FindPhiAlgorithm(std::string_view id) {
  auto table = PhiTable();
  for (auto& entry : table) {
    if (entry.id == id) return entry;
  }
  throw PreconditionError("unknown Phi algorithm '" + std::string(id) +
                          "' (known: " + Known(table) + ")");
}

std::vector<std::string> TspAlgorithmIds() {
  std::vector<std::string> ids;
  for (const auto& entry : TspTable()) ids.push_back(entry.id);
  return ids;
}

std::vector<std::string> PhiAlgorithmIds() {
  std::vector<std::string> ids;
  for (const auto& entry : PhiTable()) ids.push_back(entry.id);
  return ids;
}

}  // namespace phitsp
