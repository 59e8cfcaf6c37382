// Copyright 2026 The extractorlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <extractorlab/classical.hpp>
#include <extractorlab/io.hpp>
#include <extractorlab/matrix.hpp>
#include <extractorlab/sdp.hpp>

#include "commands.hpp"

namespace cli = extractorlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Constructs and certifies classical and quantum min-entropy "
               "extractors; reports are canonical JSON on stdout."};
  app.require_subcommand(1);

  cli::Args args;
  std::function<int(const cli::Args&)> handler;

  auto add_family_flags = [&](CLI::App* cmd, bool need_k) {
    cmd->add_option("--n", args.n, "input size in (qu)bits");
    cmd->add_option("--m", args.m, "output size in (qu)bits");
    auto* k = cmd->add_option("--k", args.k, "min-entropy threshold");
    if (need_k) k->required();
    cmd->add_option("--d", args.d, "seed size in bits (sampled families)");
    cmd->add_option("--family", args.family,
                    "hash|perm|clifford|haar|file:PATH");
    cmd->add_option("--mode", args.mode, "strong|weak")
        ->check(CLI::IsMember({"strong", "weak"}));
    cmd->add_option("--seed", args.seed, "64-bit RNG seed");
    cmd->add_option("--out", args.out, "output file path");
  };

  auto* certify = app.add_subcommand("certify", "spectral certificate and "
                                                "(k, epsilon) trade-off");
  add_family_flags(certify, true);
  certify->callback([&] { handler = cli::run_certify; });

  auto* verify = app.add_subcommand(
      "verify", "Monte-Carlo soundness against certified-entropy states");
  add_family_flags(verify, true);
  verify->add_option("--trials", args.trials, "number of sampled states")
      ->required();
  verify->callback([&] { handler = cli::run_verify; });

  auto* witness = app.add_subcommand(
      "witness", "seed lower-bound witness states and their checks");
  add_family_flags(witness, false);
  witness->add_option("--kind", args.kind, "prop2|prop4|prop5")
      ->required()
      ->check(CLI::IsMember({"prop2", "prop4", "prop5"}));
  witness->callback([&] { handler = cli::run_witness; });

  auto* shortseed = app.add_subcommand(
      "shortseed", "sampled-unitary short-seed extraction experiment");
  add_family_flags(shortseed, true);
  shortseed->add_option("--trials", args.trials, "number of flat sources")
      ->required();
  shortseed->callback([&] { handler = cli::run_shortseed; });

  auto* design = app.add_subcommand(
      "design-check", "2-design deviation of a unitary family");
  add_family_flags(design, false);
  design->callback([&] { handler = cli::run_design_check; });

  auto* entropy = app.add_subcommand(
      "entropy", "min-entropy and Renyi-2 quantities of a state file");
  entropy->add_option("state", args.state_path, "state file path")->required();
  entropy->add_option("--seed", args.seed, "64-bit RNG seed");
  entropy->callback([&] { handler = cli::run_entropy; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitParse;
  }

  try {
    return handler(args);
  } catch (const extractorlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitParse;
  } catch (const extractorlab::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitOverflow;
  } catch (const extractorlab::InfeasibleWitness& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInfeasible;
  } catch (const extractorlab::SdpError& e) {
    std::cerr << "error: solver did not converge: " << e.what()
              << " (gap=" << e.gap << ", iterations=" << e.iterations << ")\n";
    return cli::kExitOverflow;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 10;
  }
}
