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

#ifndef PHITSP_EXACT_LP_H_
#define PHITSP_EXACT_LP_H_

#include <utility>
#include <vector>

#include "phitsp/rational.h"

namespace phitsp {

// One structural column of a packing LP in sparse form (row, coefficient).
using SparseColumn = std::vector<std::pair<int, Rational>>;

struct LpSolution {
  enum class Status { kOptimal, kUnbounded };
  Status status = Status::kOptimal;
  Rational value;
  std::vector<Rational> x;  // structural variables
  int pivots = 0;
};

// Solves  max c^T x  s.t.  A x <= b, x >= 0  with b >= 0 exactly, by revised
// simplex from the slack basis using Bland's rule (so it cannot cycle).
// A is given column-wise over num_rows rows.
LpSolution MaximizePacking(int num_rows, const std::vector<SparseColumn>& columns,
                           const std::vector<Rational>& objective,
                           const std::vector<Rational>& rhs);

}  // namespace phitsp

#endif  // PHITSP_EXACT_LP_H_
