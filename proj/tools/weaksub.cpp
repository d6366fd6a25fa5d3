// Copyright 2026 The Authors.
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

// weaksub: command-line front end for the weakly submodular maximization
// toolkit. One subcommand per experiment mode; a JSON config document
// carries the instance and parameters, and flags override its top-level
// fields. Machine-readable output is emitted even on failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wsub/cli.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::string spec_inline;
  std::string spec_file;
  std::string out_path;
  std::string format;
  std::string family;
  std::string pipeline_family;
  std::string guarantee_type;
  std::string sweep_axis;
  std::vector<double> sweep_values;
  std::vector<double> gamma_values;
  double gamma = -1.0;
  double alpha = -1.0;
  long long big_k = -1;
  long long m = -1;
  int k = -1;
  int trials = -1;
  int n = -1;
  int instances = -1;
  long long seed = -1;
  bool reference_opt = false;
};

int worker_count_from_env() {
  const char* env = std::getenv("WEAKSUB_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

wsub::ExperimentConfig assemble(const std::string& mode, const Flags& flags) {
  wsub::Json config_json = wsub::Json::object();
  std::string base_dir;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw std::invalid_argument("cannot open config: " + flags.config_path);
    config_json = wsub::Json::parse(in);
    base_dir = std::filesystem::path(flags.config_path).parent_path().string();
  }
  wsub::ExperimentConfig cfg = wsub::config_from_json(config_json, base_dir);
  cfg.mode = mode;
  cfg.threads = worker_count_from_env();

  if (!flags.spec_inline.empty()) {
    cfg.spec = wsub::spec_from_json(wsub::Json::parse(flags.spec_inline), base_dir);
  }
  if (!flags.spec_file.empty()) {
    std::ifstream in(flags.spec_file);
    if (!in) throw std::invalid_argument("cannot open spec file: " + flags.spec_file);
    cfg.spec = wsub::spec_from_json(
        wsub::Json::parse(in), std::filesystem::path(flags.spec_file).parent_path().string());
  }
  if (flags.k >= 1) cfg.k = flags.k;
  if (flags.trials >= 1) cfg.trials = flags.trials;
  if (flags.seed >= 0) cfg.seed = static_cast<std::uint64_t>(flags.seed);
  if (!flags.format.empty()) cfg.format = flags.format;
  if (!flags.out_path.empty()) cfg.out_path = flags.out_path;
  if (!flags.family.empty()) cfg.family = flags.family;
  if (!flags.pipeline_family.empty()) cfg.pipeline_family = flags.pipeline_family;
  if (flags.n >= 1) cfg.verify_n = flags.n;
  if (flags.instances >= 1) cfg.verify_instances = flags.instances;
  if (flags.reference_opt) cfg.reference_is_opt = true;
  if (!flags.sweep_axis.empty()) cfg.sweep_axis = flags.sweep_axis;
  if (!flags.sweep_values.empty()) cfg.sweep_values = flags.sweep_values;

  if (!flags.guarantee_type.empty()) {
    wsub::Json g = cfg.guarantee.is_object() ? cfg.guarantee : wsub::Json::object();
    g["type"] = flags.guarantee_type;
    if (flags.gamma >= 0.0) g["gamma"] = flags.gamma;
    if (!flags.gamma_values.empty()) g["gamma"] = flags.gamma_values;
    if (flags.alpha >= 0.0) g["alpha"] = flags.alpha;
    if (flags.big_k >= 1) g["k"] = flags.big_k;
    if (flags.m >= 1) g["m"] = flags.m;
    if (!flags.pipeline_family.empty()) g["family"] = flags.pipeline_family;
    if (!flags.family.empty()) g["family"] = flags.family;
    cfg.guarantee = std::move(g);
  }
  return cfg;
}

void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output path: " + out_path);
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weaksub: randomized greedy maximization of weakly submodular set functions,\n"
               "local-ratio measurement, and approximation-guarantee verification"};
  app.require_subcommand(1);

  Flags flags;
  std::string mode;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", flags.config_path, "JSON config document");
    sub->add_option("--spec", flags.spec_inline, "inline function-spec JSON");
    sub->add_option("--spec-file", flags.spec_file, "path to a function-spec JSON file");
    sub->add_option("--k", flags.k, "cardinality budget");
    sub->add_option("--seed", flags.seed, "master seed");
    sub->add_option("--trials", flags.trials, "Monte Carlo trial count");
    sub->add_option("--format", flags.format, "output format: json | csv");
    sub->add_option("--out", flags.out_path, "output path (default: stdout)");
    sub->callback([&mode, sub] { mode = sub->get_name(); });
  };

  add_common(app.add_subcommand("maximize", "run the randomized greedy"));
  add_common(app.add_subcommand("opt", "brute-force optimum"));
  add_common(app.add_subcommand("ratio", "fit weak/pseudo submodularity ratios"));
  add_common(app.add_subcommand("profile", "per-iteration gamma profile"));
  CLI::App* verify = app.add_subcommand("verify", "verify analytic ratio bounds");
  add_common(verify);
  verify->add_option("--family", flags.family, "bound family (or 'all')");
  verify->add_option("--n", flags.n, "instance ground-set size");
  verify->add_option("--instances", flags.instances, "instances per family");
  CLI::App* expect = app.add_subcommand("expect", "exact expectation over all random branches");
  add_common(expect);
  expect->add_flag("--reference-opt", flags.reference_opt,
                   "track E[f(S_i u OPT)] against the brute-force optimum");
  CLI::App* guarantee = app.add_subcommand("guarantee", "evaluate approximation factors");
  add_common(guarantee);
  guarantee->add_option("--type", flags.guarantee_type, "factor to evaluate");
  guarantee->add_option("--gamma", flags.gamma, "scalar gamma");
  guarantee->add_option("--gamma-profile", flags.gamma_values, "gamma_i profile");
  guarantee->add_option("--alpha", flags.alpha, "warm-start quality");
  guarantee->add_option("--limit-k", flags.big_k, "k for limit evaluations");
  guarantee->add_option("--m", flags.m, "original-element count (partial dummy)");
  guarantee->add_option("--family", flags.family, "factor family");
  CLI::App* pipeline = app.add_subcommand("pipeline", "warm-started product maximization");
  add_common(pipeline);
  pipeline->add_option("--pipeline-family", flags.pipeline_family,
                       "guarantee family of the second factor");
  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep emitting one summary row per point");
  add_common(sweep);
  sweep->add_option("--axis", flags.sweep_axis, "sweep axis: k | n | seed | gamma");
  sweep->add_option("--values", flags.sweep_values, "grid values");

  CLI11_PARSE(app, argc, argv);

  try {
    const wsub::ExperimentConfig cfg = assemble(mode, flags);
    const wsub::CommandOutput result = wsub::run_command(cfg);
    emit(result.body, cfg.out_path);
    return result.exit_code;
  } catch (const std::exception& e) {
    wsub::Json err;
    err["error"] = e.what();
    try {
      emit(err.dump(2) + "\n", flags.out_path);
    } catch (...) {
      std::cout << err.dump(2) << "\n";
    }
    return 2;
  }
}
