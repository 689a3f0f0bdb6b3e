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

#ifndef PHITSP_INSTANCE_IO_H_
#define PHITSP_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "phitsp/graph.h"
#include "phitsp/interface.h"

namespace phitsp {

// Line-oriented instance text:
//   n <int>
//   m <int>
//   e <u> <v> <length>      (m lines, u < v)
//   I <ids...>
//   T <ids...>
//   C <ids> ; <ids> ; ...
// '#' starts a comment. Syntax and semantic problems throw ParseError with
// the 1-based line and column of the offending token.
PhiInstance ParseInstance(std::string_view text);

// Canonical text; ParseInstance(WriteInstance(x)) reproduces x.
std::string WriteInstance(const PhiInstance& inst);

// Tour text: one "u v mult" line per edge in the support.
EdgeMultiSet ParseTour(std::string_view text, const WeightedGraph& graph);
std::string WriteTour(const EdgeMultiSet& tour, const WeightedGraph& graph);

// Throws Error when the file cannot be read.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace phitsp

#endif  // PHITSP_INSTANCE_IO_H_
