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

#include "phitsp/exact_lp.h"

#include "phitsp/errors.h"

namespace phitsp {

LpSolution MaximizePacking(int num_rows, const std::vector<SparseColumn>& columns,
                           const std::vector<Rational>& objective,
                           const std::vector<Rational>& rhs) {
  const int m = num_rows;
  const int n = static_cast<int>(columns.size());
  if (static_cast<int>(objective.size()) != n ||
      static_cast<int>(rhs.size()) != m) {
    throw PreconditionError("LP dimensions disagree");
  }
  for (const Rational& b : rhs) {
    if (b < 0) throw PreconditionError("LP right-hand side must be >= 0");
  }

  // Variables 0..n-1 are structural, n..n+m-1 are slacks.
  std::vector<int> basis(m);
  std::vector<int> row_of(n + m, -1);
  for (int r = 0; r < m; ++r) {
    basis[r] = n + r;
    row_of[n + r] = r;
  }
  std::vector<std::vector<Rational>> inverse(m, std::vector<Rational>(m, 0));
  for (int r = 0; r < m; ++r) inverse[r][r] = 1;
  std::vector<Rational> basic_value = rhs;
  auto cost = [&](int var) -> Rational {
    return var < n ? objective[var] : Rational(0);
  };

  LpSolution out;
  std::vector<Rational> dual(m);
  std::vector<Rational> direction(m);
  while (true) {
    for (int i = 0; i < m; ++i) {
      dual[i] = 0;
      for (int r = 0; r < m; ++r) {
        if (inverse[r][i] != 0) dual[i] += cost(basis[r]) * inverse[r][i];
      }
    }
    // Bland: lowest-index improving variable enters.
    int entering = -1;
    for (int j = 0; j < n + m && entering == -1; ++j) {
      if (row_of[j] != -1) continue;
      Rational reduced = cost(j);
      if (j < n) {
        for (const auto& [row, coef] : columns[j]) reduced -= dual[row] * coef;
      } else {
        reduced -= dual[j - n];
      }
      if (reduced > 0) entering = j;
    }
    if (entering == -1) break;

    for (int r = 0; r < m; ++r) {
      direction[r] = 0;
      if (entering < n) {
        for (const auto& [row, coef] : columns[entering]) {
          if (inverse[r][row] != 0) direction[r] += inverse[r][row] * coef;
        }
      } else {
        direction[r] = inverse[r][entering - n];
      }
    }
    int leave = -1;
    Rational best_ratio;
    for (int r = 0; r < m; ++r) {
      if (direction[r] <= 0) continue;
      Rational ratio = basic_value[r] / direction[r];
      if (leave == -1 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == -1) {
      out.status = LpSolution::Status::kUnbounded;
      return out;
    }

    // Pivot on (leave, entering).
    const Rational pivot = direction[leave];
    for (int c = 0; c < m; ++c) inverse[leave][c] /= pivot;
    basic_value[leave] /= pivot;
    for (int r = 0; r < m; ++r) {
      if (r == leave || direction[r] == 0) continue;
      const Rational factor = direction[r];
      for (int c = 0; c < m; ++c) {
        if (inverse[leave][c] != 0) inverse[r][c] -= factor * inverse[leave][c];
      }
      basic_value[r] -= factor * basic_value[leave];
    }
    row_of[basis[leave]] = -1;
    basis[leave] = entering;
    row_of[entering] = leave;
    ++out.pivots;
  }

  out.x.assign(n, 0);
  out.value = 0;
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) {
      out.x[basis[r]] = basic_value[r];
      out.value += objective[basis[r]] * basic_value[r];
    }
  }
  return out;
}

}  // namespace phitsp
