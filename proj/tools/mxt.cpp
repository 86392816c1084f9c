// Copyright 2026 The mxt Authors. All Rights Reserved.
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
#include "mxt/cli.hpp"

int main(int argc, char** argv) {
  using namespace mxt::cli;

  CLI::App app{"Minimax trees, minimax-redundancy codes and group tests"};
  app.require_subcommand(1);

  TreeOptions tree;
  auto* tree_cmd = app.add_subcommand("tree", "Build a minimax tree from a weight file");
  tree_cmd->add_option("input", tree.input, "Weight file, one weight per line ('-' for stdin)")
      ->required();
  tree_cmd->add_option("--mode", tree.mode, "auto, int, real or heap");
  tree_cmd->add_option("--format", tree.format, "cost, json or dot");

  CodeOptions code;
  auto* code_cmd = app.add_subcommand("code", "Build a prefix code from a distribution file");
  code_cmd->add_option("input", code.input, "symbol<TAB>count-or-prob file")->required();
  code_cmd->add_option("--algo", code.algo, "minimax, shannon or huffman");
  code_cmd->add_option("--report", code.report,
                       "True distribution P to report redundancy against");

  std::string group_input;
  auto* group_cmd =
      app.add_subcommand("grouptest", "Design a group test from an estimated distribution");
  group_cmd->add_option("input", group_input, "symbol<TAB>count-or-prob file")->required();

  VerifyOptions verify;
  verify.seed = default_seed();
  auto* verify_cmd = app.add_subcommand("verify", "Check the builders against brute force");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest multiset size");
  verify_cmd->add_option("--trials", verify.trials, "Random cases per randomized suite");
  verify_cmd->add_option("--seed", verify.seed, "Random seed (default: MXT_SEED or 42)");

  BenchOptions bench;
  bench.seed = default_seed();
  auto* bench_cmd = app.add_subcommand("bench", "Time construction across input sizes");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes, N or 2^K");
  bench_cmd->add_option("--algo", bench.algo, "int or real");
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per size");
  bench_cmd->add_option("--seed", bench.seed, "Random seed (default: MXT_SEED or 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadFlags;
  }

  if (*tree_cmd) return run_tree(tree, std::cout, std::cerr);
  if (*code_cmd) return run_code(code, std::cout, std::cerr);
  if (*group_cmd) return run_grouptest(group_input, std::cout, std::cerr);
  if (*verify_cmd) return run_verify(verify, std::cout, std::cerr);
  return run_bench(bench, std::cout, std::cerr);
}
