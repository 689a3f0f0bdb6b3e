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

#ifndef PHITSP_HARNESS_H_
#define PHITSP_HARNESS_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "phitsp/generator.h"
#include "phitsp/reduction.h"

namespace phitsp {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;

struct SolveArgs {
  std::string instance;
  std::string algorithm = "boost";  // "boost" or a registered Phi algorithm
  std::string epsilon = "1";
  int levels = 1;
  std::optional<int> k;  // interface cap; defaults to max(2, |I|)
  int dp_k = 0;
  std::string base = "seven-approx";
  std::string tsp = "christofides";
  std::string out;  // tour file; defaults to <instance>.tour
};

struct OracleArgs {
  std::string instance;
  std::string problem = "phi";  // phi | tsp | path
};

struct BenchArgs {
  std::string dir;
  std::string out;
  bool with_oracle = false;
  std::vector<std::string> algorithms = {"seven-approx", "boost"};
  std::string epsilon = "1";
  int levels = 1;
  std::string tsp = "christofides";
};

PhiInstance LoadInstance(const std::string& path);

int RunSolve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int RunCheck(const std::string& instance, const std::string& tour,
             std::ostream& out, std::ostream& err);
int RunOracle(const OracleArgs& args, std::ostream& out, std::ostream& err);
// Writes to out_path, or to out when out_path is empty.
int RunGen(const GenOptions& options, const std::string& out_path,
           std::ostream& out, std::ostream& err);
// One CSV row per (instance, algorithm) for every *.phi file in the
// directory, sorted by instance then algorithm.
int RunBench(const BenchArgs& args, std::ostream& out, std::ostream& err);

inline constexpr const char* kCsvHeader =
    "instance,algorithm,epsilon,k,levels,length,optimum,ratio,valid,millis";

// Formats a report as a CSV row matching kCsvHeader.
std::string CsvRow(const SolveReport& report);

}  // namespace phitsp

#endif  // PHITSP_HARNESS_H_
