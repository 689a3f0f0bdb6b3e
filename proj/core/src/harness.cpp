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

#include "phitsp/harness.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "phitsp/errors.h"
#include "phitsp/instance_io.h"
#include "phitsp/oracle.h"
#include "phitsp/registry.h"

namespace phitsp {
namespace {

Rational ParseEpsilon(const std::string& text) {
  std::optional<Rational> value = ParseRational(text);
  if (!value || *value <= 0 || *value > 1) {
    throw PreconditionError("epsilon must be a rational in (0, 1], got '" +
                            text + "'");
  }
  return *value;
}

BoostParams MakeParams(const PhiInstance& inst, const std::string& epsilon,
                       int levels, std::optional<int> k, int dp_k,
                       const std::string& base, const std::string& tsp) {
  BoostParams params;
  params.epsilon = ParseEpsilon(epsilon);
  params.max_boost_iters = levels;
  params.k_interface_cap = k.value_or(std::max(2, inst.phi.size()));
  params.dp_k = dp_k;
  params.base_algorithm = base;
  params.tsp_algorithm = tsp;
  return params;
}

SolveResult RunAlgorithm(const PhiInstance& inst, const std::string& algorithm,
                         const BoostParams& params) {
  if (algorithm == "boost") return SolvePhiTsp(inst, params);
  PhiAlgorithm direct = FindPhiAlgorithm(algorithm);
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  result.tour = direct.run(inst);
  SolveReport& report = result.report;
  report.algorithm_id = direct.id;
  report.epsilon = params.epsilon;
  report.k = params.k_interface_cap;
  report.levels = 0;
  report.length = result.tour.Length(inst.graph);
  report.valid = IsPhiTour(result.tour, inst);
  report.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return result;
}

}  // namespace

PhiInstance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

std::string CsvRow(const SolveReport& r) {
  std::ostringstream row;
  char millis[32];
  std::snprintf(millis, sizeof(millis), "%.3f", r.millis);
  row << r.instance_id << ',' << r.algorithm_id << ','
      << FormatRational(r.epsilon) << ',' << r.k << ',' << r.levels << ','
      << (r.valid ? FormatRational(r.length) : "") << ','
      << (r.optimum ? FormatRational(*r.optimum) : "") << ','
      << (r.ratio ? FormatRational(*r.ratio) : "") << ',' << (r.valid ? 1 : 0)
      << ',' << millis;
  return row.str();
}

int RunSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    PhiInstance inst = LoadInstance(args.instance);
    BoostParams params = MakeParams(inst, args.epsilon, args.levels, args.k,
                                    args.dp_k, args.base, args.tsp);
    SolveResult result = RunAlgorithm(inst, args.algorithm, params);
    if (!result.report.valid) {
      err << "error: " << DiagnosePhiTour(result.tour, inst).Describe() << '\n';
      return kExitFailure;
    }
    const std::string path = args.out.empty() ? args.instance + ".tour" : args.out;
    WriteFile(path, WriteTour(result.tour, inst.graph));
    out << "algorithm " << result.report.algorithm_id << '\n'
        << "levels " << result.report.levels << '\n'
        << "length " << FormatRational(result.report.length) << '\n'
        << "tour " << path << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int RunCheck(const std::string& instance, const std::string& tour,
             std::ostream& out, std::ostream& err) {
  try {
    PhiInstance inst = LoadInstance(instance);
    EdgeMultiSet f = ParseTour(ReadFile(tour), inst.graph);
    TourDiagnosis diagnosis = DiagnosePhiTour(f, inst);
    if (!diagnosis.ok()) {
      err << "invalid: " << diagnosis.Describe() << '\n';
      return kExitFailure;
    }
    out << "valid length " << FormatRational(f.Length(inst.graph)) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int RunOracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  try {
    PhiInstance inst = LoadInstance(args.instance);
    OracleResult result;
    if (args.problem == "phi") {
      result = OraclePhiOpt(inst);
    } else if (args.problem == "tsp") {
      result = OracleTsp(inst.graph);
    } else if (args.problem == "path") {
      std::vector<int> ends = inst.phi.odd_targets().members();
      if (ends.size() != 2) {
        throw PreconditionError("path problem needs exactly two T vertices");
      }
      result = OraclePathTsp(inst.graph, ends[0], ends[1]);
    } else {
      throw PreconditionError("unknown problem '" + args.problem +
                              "' (known: phi, tsp, path)");
    }
    if (!result.feasible) {
      out << "infeasible\n";
      return kExitFailure;
    }
    out << "optimum " << FormatRational(result.optimum) << '\n'
        << "optima " << result.num_optima << '\n'
        << WriteTour(result.witness, inst.graph);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int RunGen(const GenOptions& options, const std::string& out_path,
           std::ostream& out, std::ostream& err) {
  try {
    std::string text = WriteInstance(GenerateInstance(options));
    if (out_path.empty()) {
      out << text;
    } else {
      WriteFile(out_path, text);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int RunBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(args.dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".phi") {
      files.push_back(entry.path());
    }
  }
  if (ec) {
    err << "error: cannot list " << args.dir << ": " << ec.message() << '\n';
    return kExitFailure;
  }
  std::sort(files.begin(), files.end());

  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> rows;
  bool failed = false;
  for (const fs::path& file : files) {
    const std::string id = file.stem().string();
    PhiInstance inst;
    try {
      inst = LoadInstance(file.string());
    } catch (const Error& e) {
      err << "error: " << file.string() << ": " << e.what() << '\n';
      failed = true;
      continue;
    }
    std::optional<Rational> optimum;
    if (args.with_oracle && inst.graph.num_edges() <= OracleOptions{}.max_edges) {
      OracleResult oracle = OraclePhiOpt(inst);
      if (oracle.feasible) optimum = oracle.optimum;
    }
    for (const std::string& algorithm : args.algorithms) {
      SolveReport report;
      try {
        BoostParams params = MakeParams(inst, args.epsilon, args.levels,
                                        std::nullopt, 0, "seven-approx", args.tsp);
        report = RunAlgorithm(inst, algorithm, params).report;
      } catch (const Error& e) {
        err << "error: " << id << " / " << algorithm << ": " << e.what() << '\n';
        report.algorithm_id = algorithm;
        report.valid = false;
        failed = true;
      }
      report.instance_id = id;
      if (algorithm == "boost") report.algorithm_id = "boost";
      if (report.valid && optimum) {
        report.optimum = optimum;
        if (*optimum > 0) report.ratio = report.length / *optimum;
      }
      if (!report.valid) failed = true;
      rows.push_back({{id, report.algorithm_id}, CsvRow(report)});
    }
  }
  std::sort(rows.begin(), rows.end());

  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  for (const auto& row : rows) csv << row.second << '\n';
  try {
    WriteFile(args.out, csv.str());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  out << rows.size() << " rows written to " << args.out << '\n';
  return failed ? kExitFailure : kExitOk;
}

}  // namespace phitsp
