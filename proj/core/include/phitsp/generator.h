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

#ifndef PHITSP_GENERATOR_H_
#define PHITSP_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "phitsp/interface.h"

namespace phitsp {

enum class GenMode { kTsp, kPath, kPhi };

std::optional<GenMode> ParseGenMode(std::string_view name);

struct GenOptions {
  int n = 5;
  int m = 6;
  int max_length = 10;  // lengths are drawn uniformly from 1..max_length
  uint64_t seed = 1;
  GenMode mode = GenMode::kTsp;
  // Interface shape for kPhi.
  int interface_size = 2;
  int num_targets = 2;
  int num_parts = 1;
  int max_retries = 100;
};

// Random spanning tree plus extra random edges, then an interface drawn per
// mode. Deterministic in the options. Throws PreconditionError for
// unsatisfiable shapes.
PhiInstance GenerateInstance(const GenOptions& options);

}  // namespace phitsp

#endif  // PHITSP_GENERATOR_H_
