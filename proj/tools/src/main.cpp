// Copyright 2026 The Market Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// market: generate, replay and benchmark mediator transaction scripts.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "market/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Mediator marketplace: generate, replay and benchmark scripts"};
  app.require_subcommand(1);

  market::GenParams params;
  std::string output;
  std::string input;
  bool strict = false;
  market::Nat repeat = 3;

  auto add_instance_flags = [&params](CLI::App* cmd) {
    cmd->add_option("--users", params.users, "Number of users")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, market::kNatMax));
    cmd->add_option("--items", params.items, "Number of items")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, market::kNatMax));
    cmd->add_option("--transactions", params.transactions,
                    "Number of sell transactions")
        ->required();
    cmd->add_option("--seed", params.seed, "PRNG seed")->required();
  };

  CLI::App* generate = app.add_subcommand("generate", "Write a synthetic instance");
  add_instance_flags(generate);
  generate->add_option("-o,--output", output, "Output YAML path")->required();

  CLI::App* run = app.add_subcommand("run", "Replay a script from the empty market");
  run->add_option("-i,--input", input, "Input YAML path")->required();
  run->add_flag("--strict", strict, "Abort at the first failed operation");

  CLI::App* bench = app.add_subcommand("bench", "Time replays of a synthetic instance");
  add_instance_flags(bench);
  bench->add_option("--repeat", repeat, "Repetitions")
      ->capture_default_str()
      ->check(CLI::Range(std::uint64_t{1}, market::kNatMax));

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed()) {
    return market::cli::cmd_generate(params, output, std::cerr);
  }
  if (run->parsed()) {
    return market::cli::cmd_run(input, strict, std::cout, std::cerr);
  }
  return market::cli::cmd_bench(params, repeat, std::cout, std::cerr);
}
