/*
 * Copyright 2026 The ecsum Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// ecsum: batch driver for the exponential-sum experiments.
//
//   ecsum <experiment> [--config PATH] [--curve PATH] [--params JSON]
//         [--seed U64] [--out PATH] [--format json|csv] [--threads N]
//         [--max-q U32]
//
// Command-line values override ECSUM_* environment variables, which override
// the config file. Exit status: 0 success, 2 invalid input, 3 scale cap.

#include <fstream>
#include <iterator>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "ecsum.hpp"

namespace {

struct Overrides {
  std::string config;
  std::string curve;
  std::string params;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> max_q;
};

ecsum::ExperimentConfig assemble(const std::string& command, const Overrides& o) {
  ecsum::ExperimentConfig c;
  if (!o.config.empty()) c = ecsum::load_experiment_config(o.config);
  if (!c.command.empty() && c.command != command) {
    ecsum::config_error("experiment", "file names \"" + c.command +
                                          "\" but the command line asks for \"" +
                                          command + "\"");
  }
  c.command = command;
  if (!o.curve.empty()) c.curve = ecsum::load_json_file(o.curve);
  if (!o.params.empty()) {
    ecsum::Json patch;
    try {
      patch = ecsum::Json::parse(o.params);
    } catch (const nlohmann::json::parse_error& e) {
      ecsum::config_error("--params", e.what());
    }
    if (!patch.is_object()) ecsum::config_error("--params", "expected a JSON object");
    c.params.merge_patch(patch);
  }
  if (o.seed) c.seed = *o.seed;
  if (o.out) c.out = *o.out;
  if (o.format) c.format = *o.format;
  if (o.threads) c.threads = *o.threads;
  if (o.max_q) c.max_q = *o.max_q;
  return c;
}

int execute(const ecsum::ExperimentConfig& c) {
  const std::string text = ecsum::render(ecsum::run_experiment(c), c.format);
  if (c.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw ecsum::Error(ecsum::ErrorKind::kConfigError, "cannot write '" + c.out + "'");
  file << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exponential sums over points of elliptic curves"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config, "Experiment file (JSON)")->envname("ECSUM_CONFIG");
  app.add_option("--curve", o.curve, "Curve file (JSON), replaces the config curve")
      ->envname("ECSUM_CURVE");
  app.add_option("--params", o.params, "JSON object merged into the config params")
      ->envname("ECSUM_PARAMS");
  app.add_option("--seed", o.seed, "Seed for every random choice")->envname("ECSUM_SEED");
  app.add_option("--out", o.out, "Output path (default: standard output)")
      ->envname("ECSUM_OUT");
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("ECSUM_FORMAT");
  app.add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->envname("ECSUM_THREADS");
  app.add_option("--max-q", o.max_q, "Largest admissible field size")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{4294967295}))
      ->envname("ECSUM_MAX_Q");

  const std::pair<const char*, const char*> commands[] = {
      {"curve-info", "Group order, structure and ordinarity of the curve"},
      {"single-sum-sweep", "Sums of psi(x(nG)) chi(nG) over the subgroup generated by G"},
      {"bilinear-u", "Weighted sums of psi(x(abG)) over residues a, b"},
      {"bilinear-v", "Weighted sums of psi(x(P + Q)) over point sets"},
      {"stationary", "Sums of psi(a x(P) + b x(nP)) over the group"},
      {"powgen", "Sums over powers e^n G of a point"},
      {"naf", "Sums over NAF combinations of endomorphism images"},
      {"sumprod", "Sizes of x-coordinate sum and product sets"},
      {"sarkozy", "Solutions of x(S) + x(T) = x(U + V)"},
      {"extract", "Statistical distance of extracted bits from uniform"}};
  static_assert(std::size(commands) == std::size(ecsum::kExperimentNames));
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    return execute(assemble(command, o));
  } catch (const ecsum::Error& e) {
    std::cerr << "ecsum: " << e.what() << "\n";
    return ecsum::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "ecsum: " << e.what() << "\n";
    return 1;
  }
}
