// Copyright 2026 The simplegames Authors
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

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  namespace cli = simplegames::cli;
  using simplegames::Method;

  CLI::App app{"Decompose simple games into intersections of weighted games"};
  app.require_subcommand(1);

  cli::DecomposeOptions decompose;
  std::string method_name = "covering";
  std::string decompose_output;
  auto* dec_cmd = app.add_subcommand("decompose", "Write a verified weighted decomposition");
  dec_cmd->add_option("game", decompose.input, "Game file")->required();
  dec_cmd->add_option("--method", method_name, "taylor-zwicker | covering | pairing")
      ->check(CLI::IsMember({"taylor-zwicker", "covering", "pairing"}));
  std::string cover_path;
  auto* cover_opt = dec_cmd->add_option("--cover", cover_path, "Code file to cluster around");
  auto* full_code_flag =
      dec_cmd->add_flag("--full-code", decompose.full_code, "Cluster around a cover of all of 2^N");
  cover_opt->excludes(full_code_flag);
  dec_cmd->add_option("--output,-o", decompose_output, "Decomposition file to write");

  std::string cover_input;
  int cover_full = 0;
  std::string cover_output;
  auto* cover_cmd = app.add_subcommand("cover", "Write a radius-1 covering code");
  auto* cover_game = cover_cmd->add_option("game", cover_input, "Game file whose L^M is covered");
  auto* cover_full_opt = cover_cmd->add_option("--full", cover_full, "Cover all of 2^N for N = {1..n}");
  cover_game->excludes(cover_full_opt);
  cover_cmd->add_option("--output,-o", cover_output, "Code file to write");

  int bounds_n = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Print dimension and covering-code bounds");
  bounds_cmd->add_option("n", bounds_n, "Player count (1..63)")->required();

  std::string verify_game;
  std::string verify_dec;
  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition against a game");
  verify_cmd->add_option("game", verify_game, "Game file")->required();
  verify_cmd->add_option("decomposition", verify_dec, "Decomposition file")->required();

  int generate_n = 0;
  std::uint64_t seed = 0;
  std::string generate_output;
  auto* gen_cmd = app.add_subcommand("generate", "Write a random simple game");
  gen_cmd->add_option("--n", generate_n, "Player count")->required();
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--output,-o", generate_output, "Game file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitBadInput;
  }

  auto optional_path = [](const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<std::string>(s);
  };

  if (*dec_cmd) {
    decompose.method = simplegames::parse_method(method_name);
    decompose.cover = optional_path(cover_path);
    decompose.output = optional_path(decompose_output);
    return cli::cmd_decompose(decompose, std::cout, std::cerr);
  }
  if (*cover_cmd) {
    cli::CoverOptions opts;
    opts.input = optional_path(cover_input);
    if (*cover_full_opt) opts.full = cover_full;
    opts.output = optional_path(cover_output);
    return cli::cmd_cover(opts, std::cout, std::cerr);
  }
  if (*bounds_cmd) return cli::cmd_bounds(bounds_n, std::cout, std::cerr);
  if (*verify_cmd) return cli::cmd_verify(verify_game, verify_dec, std::cout, std::cerr);
  if (*gen_cmd) {
    return cli::cmd_generate(generate_n, seed, optional_path(generate_output), std::cout,
                             std::cerr);
  }
  return cli::kExitBadInput;
}
