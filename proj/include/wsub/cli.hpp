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

#ifndef WSUB_CLI_HPP_
#define WSUB_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsub/serialize.hpp"
#include "wsub/tolerance.hpp"
#include "wsub/zoo.hpp"

namespace wsub {

// One experiment, ingested from a JSON config document; CLI flags override
// the top-level fields.
struct ExperimentConfig {
  std::optional<FunctionSpec> spec;
  std::string mode;
  int k = 2;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string format = "json";  // json | csv
  std::string out_path;         // empty = stdout
  Tolerance tol;
  int threads = 1;

  // verify
  std::string family = "all";
  int verify_n = 8;
  int verify_instances = 50;

  // ratio / profile
  int max_pair_size = -1;

  // expect
  std::optional<std::vector<int>> reference_elements;
  bool reference_is_opt = false;

  // pipeline
  std::string pipeline_family;  // empty = infer from the second factor
  std::optional<long long> warm_size;

  // guarantee
  Json guarantee;

  // sweep
  std::string sweep_axis;
  std::vector<double> sweep_values;
  Json generator;
};

ExperimentConfig config_from_json(const Json& j, const std::string& base_dir = "");

struct CommandOutput {
  std::string body;
  int exit_code = 0;  // 0 = all checks passed, 1 = a requested check failed
};

// Dispatches on cfg.mode: maximize | opt | ratio | profile | verify |
// expect | guarantee | pipeline | sweep. Throws std::invalid_argument on
// config errors; the CLI front end turns those into {"error": ...} with
// exit code 2.
CommandOutput run_command(const ExperimentConfig& cfg);

// Monte Carlo summary against the brute-force optimum and the applicable
// profile guarantee. The statistical pass criterion allows four standard
// errors of slack because the guarantees bound the true expectation; when the
// branch tree is tractable (k <= 6) the exact expectation replaces the
// sample mean in the pass decision and no slack is needed.
struct TrialSummary {
  MonteCarloResult mc;
  bool has_opt = false;
  double opt_value = 0.0;
  double empirical_ratio = 0.0;
  bool has_exact = false;
  double exact_expected_value = 0.0;
  bool has_guarantee = false;
  double guarantee_value = 0.0;
  std::string guarantee_kind;
  bool pass = true;
};

Json to_json(const TrialSummary& s);

}  // namespace wsub

#endif  // WSUB_CLI_HPP_
