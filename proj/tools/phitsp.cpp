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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "phitsp/generator.h"
#include "phitsp/harness.h"

int main(int argc, char** argv) {
  CLI::App app{"Path TSP and interface TSP via reduction to TSP"};
  app.require_subcommand(1);

  phitsp::SolveArgs solve;
  int solve_k = -1;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and write its tour");
  solve_cmd->add_option("--instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--algo", solve.algorithm,
                        "boost, seven-approx or exact-phi")
      ->capture_default_str();
  solve_cmd->add_option("--epsilon", solve.epsilon, "Rational in (0, 1]")
      ->capture_default_str();
  solve_cmd->add_option("--levels", solve.levels, "Boosting levels")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--k", solve_k, "Interface size cap (default max(2, |I|))");
  solve_cmd->add_option("--dp-k", solve.dp_k,
                        "Per-cut guess budget (default floor(8/epsilon))");
  solve_cmd->add_option("--base", solve.base, "Phi algorithm at level 0")
      ->capture_default_str();
  solve_cmd->add_option("--tsp", solve.tsp, "TSP algorithm")->capture_default_str();
  solve_cmd->add_option("--out", solve.out, "Tour file (default <instance>.tour)");

  phitsp::OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by enumeration");
  oracle_cmd->add_option("--instance", oracle.instance, "Instance file")->required();
  oracle_cmd->add_option("--problem", oracle.problem, "phi, tsp or path")
      ->capture_default_str()
      ->check(CLI::IsMember({"phi", "tsp", "path"}));

  std::string check_instance;
  std::string check_tour;
  auto* check_cmd = app.add_subcommand("check", "Validate a tour file");
  check_cmd->add_option("--instance", check_instance, "Instance file")->required();
  check_cmd->add_option("--tour", check_tour, "Tour file")->required();

  phitsp::GenOptions gen;
  std::string gen_mode = "tsp";
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random feasible instance");
  gen_cmd->add_option("--n", gen.n, "Vertices")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "Edges")->capture_default_str();
  gen_cmd->add_option("--max-len", gen.max_length, "Largest edge length")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--mode", gen_mode, "tsp, path or phi")
      ->capture_default_str()
      ->check(CLI::IsMember({"tsp", "path", "phi"}));
  gen_cmd->add_option("--interface", gen.interface_size, "|I| in phi mode")
      ->capture_default_str();
  gen_cmd->add_option("--targets", gen.num_targets, "|T| in phi mode")
      ->capture_default_str();
  gen_cmd->add_option("--parts", gen.num_parts, "|C| in phi mode")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  phitsp::BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the algorithm matrix over a directory");
  bench_cmd->add_option("--dir", bench.dir, "Directory of .phi files")->required();
  bench_cmd->add_option("--out", bench.out, "CSV output")->required();
  bench_cmd->add_flag("--with-oracle", bench.with_oracle, "Add exact optima");
  bench_cmd->add_option("--algos", bench.algorithms, "Algorithms to run")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--epsilon", bench.epsilon, "Rational in (0, 1]")
      ->capture_default_str();
  bench_cmd->add_option("--levels", bench.levels, "Boosting levels")
      ->capture_default_str();
  bench_cmd->add_option("--tsp", bench.tsp, "TSP algorithm")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) {
    if (solve_k >= 0) solve.k = solve_k;
    return phitsp::RunSolve(solve, std::cout, std::cerr);
  }
  if (oracle_cmd->parsed()) return phitsp::RunOracle(oracle, std::cout, std::cerr);
  if (check_cmd->parsed()) {
    return phitsp::RunCheck(check_instance, check_tour, std::cout, std::cerr);
  }
  if (gen_cmd->parsed()) {
    gen.mode = *phitsp::ParseGenMode(gen_mode);
    return phitsp::RunGen(gen, gen_out, std::cout, std::cerr);
  }
  return phitsp::RunBench(bench, std::cout, std::cerr);
}
