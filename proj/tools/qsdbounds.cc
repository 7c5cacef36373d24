// Copyright 2026 The qsdbounds Authors
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
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qsd/commands.h"
#include "qsd/json_io.h"

namespace cli = qsd::cli;

int main(int argc, char** argv) {
  CLI::App app{"Bounds on the optimal success probability of minimum-error state discrimination"};
  app.set_version_flag("--version", std::string(qsd::kToolVersion));
  app.require_subcommand(1);

  std::string bounds_file, bounds_out, bounds_format = "table";
  auto* bounds = app.add_subcommand("bounds", "Compute every bound for an ensemble file");
  bounds->add_option("file", bounds_file, "Ensemble JSON")->required();
  bounds->add_option("--out", bounds_out, "Write the JSON report here");
  bounds->add_option("--format", bounds_format, "Stdout format")
      ->check(CLI::IsMember({"table", "json"}));

  std::string cert_ensemble, cert_povm;
  auto* certify = app.add_subcommand(
      "certify", "Check the Holevo optimality conditions for a POVM (tolerance from QSD_TOL)");
  certify->add_option("ensemble", cert_ensemble, "Ensemble JSON")->required();
  certify->add_option("povm", cert_povm, "POVM JSON")->required();

  std::string povm_ensemble, povm_out;
  std::size_t povm_j = 0;
  bool povm_all = false;
  auto* povm = app.add_subcommand("povm", "Build the reference-state measurements M^(j)");
  povm->add_option("ensemble", povm_ensemble, "Ensemble JSON")->required();
  auto* j_opt = povm->add_option("--j", povm_j, "Reference state index (0-based)");
  auto* all_opt = povm->add_flag("--all", povm_all, "Every reference index");
  j_opt->excludes(all_opt);
  all_opt->excludes(j_opt);
  povm->add_option("--out", povm_out, "Directory for povm_j<N>.json files");

  auto* example = app.add_subcommand("example", "Reproduce the three-qubit-state example");

  std::string sweep_config;
  auto* sweep = app.add_subcommand("sweep", "Run a random-ensemble sweep");
  sweep->add_option("config", sweep_config, "Sweep config JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitParse;
  }

  if (bounds->parsed()) {
    std::optional<std::filesystem::path> out;
    if (!bounds_out.empty()) out = bounds_out;
    return cli::cmd_bounds(bounds_file, out, cli::parse_output_format(bounds_format), std::cout,
                           std::cerr);
  }
  if (certify->parsed()) return cli::cmd_certify(cert_ensemble, cert_povm, std::cout, std::cerr);
  if (povm->parsed()) {
    if (!povm_all && j_opt->count() == 0) {
      std::cerr << "povm: give --j N or --all\n";
      return cli::kExitParse;
    }
    std::optional<std::size_t> j;
    if (!povm_all) j = povm_j;
    std::optional<std::filesystem::path> out;
    if (!povm_out.empty()) out = povm_out;
    return cli::cmd_povm(povm_ensemble, j, out, std::cout, std::cerr);
  }
  if (example->parsed()) return cli::cmd_example(std::cout, std::cerr);
  if (sweep->parsed()) return cli::cmd_sweep(sweep_config, std::cout, std::cerr);
  return cli::kExitParse;
}
