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

#include "wsub/cli.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

#include "wsub/greedy.hpp"
#include "wsub/guarantees.hpp"
#include "wsub/ratio.hpp"
#include "wsub/rng.hpp"

namespace wsub {

namespace {

constexpr int kExhaustiveFitLimit = 16;
constexpr int kMonotoneCheckLimit = 18;

OraclePtr require_oracle(const ExperimentConfig& cfg) {
  if (!cfg.spec) {
    throw std::invalid_argument("mode '" + cfg.mode + "' requires a function_spec");
  }
  return build_oracle(*cfg.spec, cfg.tol);
}

// Profile-based guarantee attached to Monte Carlo summaries. Monotone
// instances get the 1 - exp(-sum gamma_i / k) form, which requires the run
// to stay on original elements (n >= 2k - 1); non-monotone instances get
// (1/ek) sum of the prefix-min profile, which stays valid when the solution
// carries dummies (|S_i n E| <= i).
struct ProfileGuarantee {
  bool available = false;
  double value = 0.0;
  std::string kind;
};

ProfileGuarantee profile_guarantee(const SetFunction& f, int k, const Tolerance& tol) {
  ProfileGuarantee out;
  const int n = f.n_original();
  if (n > kExhaustiveFitLimit || n > kMonotoneCheckLimit) return out;
  CheckOptions copts;
  copts.tol = tol;
  const bool monotone = check_monotone(f, copts).holds;
  FitOptions fopts;
  fopts.tol = tol;
  const GammaProfileReport profile = gamma_profile(f, n, k, fopts);
  if (monotone) {
    if (n < 2 * k - 1) return out;  // dummies could enter the candidate pool
    out.available = true;
    out.value = factor_monotone(profile.gamma, k).exp_form;
    out.kind = "monotone_profile";
    return out;
  }
  if (!profile.negatives_min_form_ok) return out;
  std::vector<double> prefix_min = profile.gamma;
  for (std::size_t i = 1; i < prefix_min.size(); ++i) {
    prefix_min[i] = std::min(prefix_min[i], prefix_min[i - 1]);
  }
  out.available = true;
  out.value = factor_nonmonotone_profile(prefix_min, k);
  out.kind = "nonmonotone_profile";
  return out;
}

TrialSummary summarize_trials(const SetFunction& f, int k, const MonteCarloResult& mc,
                              const ExperimentConfig& cfg) {
  TrialSummary s;
  s.mc = mc;
  if (f.n_original() <= 24) {
    const RunResult opt = brute_force_opt(f, k);
    s.has_opt = true;
    s.opt_value = opt.value;
    s.empirical_ratio = opt.value != 0.0 ? mc.mean / opt.value : 0.0;
  }
  if (k <= 6 && f.n_original() <= 16) {
    s.has_exact = true;
    s.exact_expected_value = exact_expectation(f, k).exact_expected_value;
  }
  const ProfileGuarantee g = profile_guarantee(f, k, cfg.tol);
  if (g.available) {
    s.has_guarantee = true;
    s.guarantee_value = g.value;
    s.guarantee_kind = g.kind;
  }
  if (s.has_opt && s.has_guarantee && s.opt_value > 0.0) {
    // The guarantees bound the true expectation: judge by the exact engine
    // when available, otherwise allow four standard errors of slack.
    if (s.has_exact) {
      s.pass = s.exact_expected_value >= (s.guarantee_value - 1e-9) * s.opt_value;
    } else {
      s.pass = s.empirical_ratio >= s.guarantee_value - 4.0 * mc.stderr_of_mean / s.opt_value;
    }
  }
  return s;
}

Json to_json_or_null(bool has, double v) { return has ? Json(v) : Json(); }

std::string summary_csv(const std::string& axis_name, const std::vector<Json>& rows) {
  std::ostringstream os;
  os << axis_name << ",mean,stderr,opt,empirical_ratio,guarantee\n";
  const auto cell = [](const Json& v) {
    return v.is_null() ? std::string() : format_double(v.get<double>());
  };
  for (const Json& r : rows) {
    os << format_double(r.at("axis").get<double>()) << ',' << cell(r.at("mean")) << ','
       << cell(r.at("stderr")) << ',' << cell(r.at("opt")) << ','
       << cell(r.at("empirical_ratio")) << ',' << cell(r.at("guarantee")) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

CommandOutput cmd_maximize(const ExperimentConfig& cfg) {
  const OraclePtr f = require_oracle(cfg);
  if (cfg.trials == 1) {
    const GreedyTrace trace = randomized_greedy(*f, cfg.k, cfg.seed);
    return {to_json(trace).dump(2) + "\n", 0};
  }
  const MonteCarloResult mc =
      monte_carlo_expectation(*f, cfg.k, cfg.trials, cfg.seed, cfg.threads);
  const TrialSummary s = summarize_trials(*f, cfg.k, mc, cfg);
  return {to_json(s).dump(2) + "\n", s.pass ? 0 : 1};
}

CommandOutput cmd_opt(const ExperimentConfig& cfg) {
  const OraclePtr f = require_oracle(cfg);
  return {to_json(brute_force_opt(*f, cfg.k)).dump(2) + "\n", 0};
}

CommandOutput cmd_ratio(const ExperimentConfig& cfg) {
  const OraclePtr f = require_oracle(cfg);
  FitOptions opts;
  opts.tol = cfg.tol;
  opts.max_pair_size = cfg.max_pair_size;
  opts.seed = cfg.seed;
  const RatioReport weak = fit_weak_gamma(*f, f->n_original(), opts);
  const RatioReport pseudo = fit_pseudo_gamma(*f, f->n_original(), opts);
  if (cfg.format == "csv") {
    std::ostringstream os;
    write_minima_csv(os, weak);
    return {os.str(), 0};
  }
  Json j;
  j["weak"] = to_json(weak);
  j["pseudo"] = to_json(pseudo);
  return {j.dump(2) + "\n", 0};
}

CommandOutput cmd_profile(const ExperimentConfig& cfg) {
  const OraclePtr f = require_oracle(cfg);
  FitOptions opts;
  opts.tol = cfg.tol;
  const GammaProfileReport profile = gamma_profile(*f, f->n_original(), cfg.k, opts);
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "i,gamma,vacuous\n";
    for (std::size_t i = 0; i < profile.gamma.size(); ++i) {
      os << i << ',' << format_double(profile.gamma[i]) << ',' << (profile.vacuous[i] ? 1 : 0)
         << '\n';
    }
    return {os.str(), 0};
  }
  return {to_json(profile).dump(2) + "\n", 0};
}

CommandOutput cmd_verify(const ExperimentConfig& cfg) {
  Json out;
  bool all_passed = true;

  if (cfg.spec) {
    // Planted-instance mode: scan the supplied oracle against one family's
    // bound plus the matching structural property check.
    const auto family = bound_family_from_name(cfg.family);
    if (!family) throw std::invalid_argument("verify: unknown family '" + cfg.family + "'");
    const OraclePtr f = build_oracle(*cfg.spec, cfg.tol);
    const VerifyReport report = verify_bounds_on_oracle(*f, *family, cfg.k, cfg.tol);
    all_passed = report.passed;
    out["bound_scan"] = to_json(report);
    if (*family == BoundFamily::kPropSubmod || *family == BoundFamily::kSumSubmodProp) {
      CheckOptions copts;
      copts.tol = cfg.tol;
      const PropertyCheck prop = check_proportionally_submodular(*f, copts);
      out["proportional_submodularity"] = to_json(prop);
      all_passed = all_passed && prop.holds;
    }
    out["passed"] = all_passed;
    return {out.dump(2) + "\n", all_passed ? 0 : 1};
  }

  std::vector<BoundFamily> families;
  if (cfg.family == "all") {
    families = all_bound_families();
  } else {
    const auto family = bound_family_from_name(cfg.family);
    if (!family) throw std::invalid_argument("verify: unknown family '" + cfg.family + "'");
    families.push_back(*family);
  }

  Json reports = Json::array();
  for (BoundFamily family : families) {
    const VerifyReport report = verify_example_bounds(family, cfg.verify_instances, cfg.verify_n,
                                                      cfg.k, cfg.seed, cfg.tol);
    all_passed = all_passed && report.passed;
    reports.push_back(to_json(report));

    if (family == BoundFamily::kPropSubmod) {
      // The structural-lemma suite rides along with the proportional family.
      Json lemmas;
      for (int i = 0; i < std::min(cfg.verify_instances, 10); ++i) {
        const std::uint64_t s = derive_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(i));
        const OraclePtr h = build_oracle(FunctionSpec::sum(
            {make_coverage_spec(cfg.verify_n, 2 * cfg.verify_n, s),
             i % 2 == 0 ? make_line_metric_spec(cfg.verify_n, derive_seed(s, 1))
                        : make_square_metric_spec(cfg.verify_n, derive_seed(s, 1))}));
        const LemmaCheck dec = check_base_decrement(*h, cfg.tol);
        const LemmaCheck shrink = check_base_shrink(*h, cfg.k, cfg.tol);
        all_passed = all_passed && dec.holds && shrink.holds;
        lemmas["base_decrement"] = to_json(dec);
        lemmas["base_shrink"] = to_json(shrink);
      }
      const LemmaCheck tab = check_tab_cross(12, 12, cfg.tol);
      all_passed = all_passed && tab.holds;
      lemmas["tab_cross"] = to_json(tab);
      reports.back()["lemmas"] = std::move(lemmas);
    }
    if (family == BoundFamily::kMetric) {
      Json lemmas;
      for (int i = 0; i < std::min(cfg.verify_instances, 10); ++i) {
        const std::uint64_t s = derive_seed(cfg.seed, 2000 + static_cast<std::uint64_t>(i));
        const FunctionSpec spec = i % 2 == 0 ? make_line_metric_spec(cfg.verify_n, s)
                                             : make_square_metric_spec(cfg.verify_n, s);
        const DistanceMatrix d = DistanceMatrix::from_rows(spec.matrix);
        const LemmaCheck ravi = check_ravi_interset(d, cfg.tol);
        const LemmaCheck decomp = check_metric_decomposition(d, cfg.tol);
        all_passed = all_passed && ravi.holds && decomp.holds;
        lemmas["ravi_interset"] = to_json(ravi);
        lemmas["decomposition"] = to_json(decomp);
      }
      reports.back()["lemmas"] = std::move(lemmas);
    }
  }
  out["families"] = std::move(reports);
  out["passed"] = all_passed;
  return {out.dump(2) + "\n", all_passed ? 0 : 1};
}

CommandOutput cmd_expect(const ExperimentConfig& cfg) {
  const OraclePtr f = require_oracle(cfg);
  std::optional<Subset> reference;
  if (cfg.reference_is_opt) {
    reference = brute_force_opt(*f, cfg.k).set;
  } else if (cfg.reference_elements) {
    reference = Subset::of(f->n_original(), *cfg.reference_elements);
  }
  return {to_json(exact_expectation(*f, cfg.k, reference)).dump(2) + "\n", 0};
}

CommandOutput cmd_guarantee(const ExperimentConfig& cfg) {
  if (!cfg.guarantee.is_object() || !cfg.guarantee.contains("type")) {
    throw std::invalid_argument("guarantee: config needs {\"guarantee\": {\"type\": ...}}");
  }
  const Json& g = cfg.guarantee;
  const std::string type = g.at("type").get<std::string>();
  Json out;
  out["type"] = type;
  if (type == "monotone_profile") {
    const auto gamma = g.at("gamma").get<std::vector<double>>();
    const FactorMonotone f = factor_monotone(gamma, static_cast<int>(gamma.size()));
    out["exact"] = f.exact;
    out["exp_form"] = f.exp_form;
  } else if (type == "nonmonotone_profile") {
    const auto gamma = g.at("gamma").get<std::vector<double>>();
    out["value"] = factor_nonmonotone_profile(gamma, static_cast<int>(gamma.size()));
  } else if (type == "general") {
    BoundParams params;
    params.alpha = g.at("alpha").get<std::vector<double>>();
    params.beta = g.at("beta").get<std::vector<double>>();
    params.alpha_bar = g.at("alpha_bar").get<std::vector<double>>();
    params.beta_bar = g.at("beta_bar").get<std::vector<double>>();
    out["value"] = factor_general(params, static_cast<int>(params.alpha.size()));
  } else if (type == "weak_asymptotic") {
    out["value"] = factor_weak_asymptotic(g.at("gamma").get<double>());
  } else if (type == "pseudo_asymptotic") {
    out["value"] = factor_pseudo_asymptotic(g.at("gamma").get<double>());
  } else if (type == "weak_finite") {
    out["value"] = factor_weak_finite(g.at("gamma").get<double>(), g.at("k").get<int>());
  } else if (type == "pseudo_finite") {
    out["value"] = factor_pseudo_finite(g.at("gamma").get<double>(), g.at("k").get<int>());
  } else if (type == "prop_submod_limit") {
    out["value"] = limit_prop_submod_factor(g.at("k").get<long long>());
  } else if (type == "product_pipeline") {
    const auto family = pipeline_family_from_name(g.at("family").get<std::string>());
    if (!family) throw std::invalid_argument("guarantee: unknown pipeline family");
    std::optional<long long> warm;
    if (g.contains("warm_size")) warm = g.at("warm_size").get<long long>();
    out["value"] = factor_product_pipeline(*family, g.at("k").get<long long>(), warm);
  } else if (type == "baselines") {
    const Baselines b = factor_baselines();
    out["product_submod_submod"] = b.product_submod_submod;
    out["product_submod_metric_sum"] = b.product_submod_metric_sum;
    out["product_submod_prop"] = b.product_submod_prop;
  } else if (type == "partial_dummy") {
    const long long k = g.at("k").get<long long>();
    const long long m = g.at("m").get<long long>();
    std::vector<double> gamma_bar;
    if (g.contains("gamma_bar")) {
      gamma_bar = g.at("gamma_bar").get<std::vector<double>>();
    } else {
      // "profile" in configs; the --family flag lands on "family".
      const std::string profile =
          g.contains("profile") ? g.at("profile").get<std::string>()
                                : g.at("family").get<std::string>();
      for (long long i = 0; i < k; ++i) {
        if (profile == "card_scaled") {
          gamma_bar.push_back(card_scaled_gamma_lower(i, k));
        } else if (profile == "prop_submod") {
          gamma_bar.push_back(prop_submod_gamma_lower(i, k));
        } else {
          throw std::invalid_argument("guarantee: unknown partial_dummy profile");
        }
      }
    }
    out["value"] = factor_partial_dummy(k, m, gamma_bar);
  } else if (type == "warm_start_ratio") {
    const std::string fam = g.at("family").get<std::string>();
    WarmStartFamily family;
    if (fam == "submodular") {
      family = WarmStartFamily::kSubmodular;
    } else if (fam == "metric_diversity") {
      family = WarmStartFamily::kMetricDiversity;
    } else {
      throw std::invalid_argument("guarantee: unknown warm-start family");
    }
    out["value"] = warm_start_ratio(g.at("alpha").get<double>(), family);
  } else {
    throw std::invalid_argument("guarantee: unknown type '" + type + "'");
  }
  return {out.dump(2) + "\n", 0};
}

PipelineFamily infer_pipeline_family(const FunctionSpec& g) {
  switch (g.kind) {
    case FunctionSpec::Kind::kCoverage:
    case FunctionSpec::Kind::kModular:
      return PipelineFamily::kSubmodular;
    case FunctionSpec::Kind::kMetricDiversity:
      return PipelineFamily::kSubmodPlusMetric;
    case FunctionSpec::Kind::kSum: {
      bool has_metric = false;
      for (const auto& c : g.children) {
        if (c.kind == FunctionSpec::Kind::kMetricDiversity) has_metric = true;
      }
      if (has_metric) return PipelineFamily::kSubmodPlusMetric;
      return PipelineFamily::kSubmodular;
    }
    default:
      throw std::invalid_argument(
          "pipeline: cannot infer the guarantee family of the second factor; "
          "set pipeline_family explicitly");
  }
}

CommandOutput cmd_pipeline(const ExperimentConfig& cfg) {
  if (!cfg.spec || cfg.spec->kind != FunctionSpec::Kind::kProduct) {
    throw std::invalid_argument("pipeline: function_spec must be a product of two functions");
  }
  if (cfg.k % 2 != 0) {
    throw std::invalid_argument("pipeline: k must be even (the warm start runs k/2 steps)");
  }
  PipelineFamily family;
  if (!cfg.pipeline_family.empty()) {
    const auto parsed = pipeline_family_from_name(cfg.pipeline_family);
    if (!parsed) {
      throw std::invalid_argument("pipeline: unknown pipeline_family '" + cfg.pipeline_family +
                                  "'");
    }
    family = *parsed;
  } else {
    family = infer_pipeline_family(cfg.spec->children[1]);
  }

  const OraclePtr f_factor = build_oracle(cfg.spec->children[0], cfg.tol);
  const OraclePtr product = build_oracle(*cfg.spec, cfg.tol);
  const int n = product->n_original();
  CheckOptions copts;
  copts.tol = cfg.tol;
  if (n <= kMonotoneCheckLimit) {
    const OraclePtr g_factor = build_oracle(cfg.spec->children[1], cfg.tol);
    if (!check_monotone(*f_factor, copts).holds || !check_monotone(*g_factor, copts).holds) {
      throw std::invalid_argument("pipeline: both product factors must be monotone");
    }
  }

  const long long warm = cfg.warm_size.value_or(cfg.k / 2);
  RunResult warm_run = deterministic_greedy(*f_factor, static_cast<int>(warm));
  // The warm start may stop early; the randomized phase fills the gap.
  if (warm_run.set.size() >= cfg.k) {
    throw std::invalid_argument("pipeline: warm start already holds k elements");
  }

  std::vector<double> values(static_cast<std::size_t>(cfg.trials));
  for (int t = 0; t < cfg.trials; ++t) {
    const GreedyTrace trace = randomized_greedy(
        *product, cfg.k, derive_seed(cfg.seed, static_cast<std::uint64_t>(t)), warm_run.set);
    values[t] = trace.final_value;
  }
  MonteCarloResult mc;
  mc.trials = cfg.trials;
  mc.min_value = values[0];
  mc.max_value = values[0];
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    mc.min_value = std::min(mc.min_value, v);
    mc.max_value = std::max(mc.max_value, v);
  }
  mc.mean = sum / cfg.trials;
  if (cfg.trials > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - mc.mean) * (v - mc.mean);
    mc.stderr_of_mean =
        std::sqrt(ss / (cfg.trials - 1.0)) / std::sqrt(static_cast<double>(cfg.trials));
  }

  Json out;
  out["pipeline_family"] = to_name(family);
  out["warm_size"] = warm;
  out["warm_set"] = to_json(warm_run.set);
  out["warm_value"] = warm_run.value;
  out["mean"] = mc.mean;
  out["stderr"] = mc.stderr_of_mean;
  out["min"] = mc.min_value;
  out["max"] = mc.max_value;
  out["trials"] = mc.trials;

  bool pass = true;
  if (n <= 24) {
    const RunResult opt = brute_force_opt(*product, cfg.k);
    out["opt_value"] = opt.value;
    const double ratio = opt.value != 0.0 ? mc.mean / opt.value : 0.0;
    out["empirical_ratio"] = ratio;
    const double guarantee = factor_product_pipeline(family, cfg.k, cfg.warm_size);
    out["guarantee"] = guarantee;
    const Baselines b = factor_baselines();
    const double baseline = family == PipelineFamily::kSubmodular ? b.product_submod_submod
                            : family == PipelineFamily::kSubmodPlusMetric
                                ? b.product_submod_metric_sum
                                : b.product_submod_prop;
    out["baseline"] = baseline;
    if (opt.value > 0.0) {
      pass = ratio >= guarantee - 4.0 * mc.stderr_of_mean / opt.value;
    }
  }
  out["pass"] = pass;
  return {out.dump(2) + "\n", pass ? 0 : 1};
}

FunctionSpec generated_spec(const Json& generator, int n, std::uint64_t seed) {
  const std::string family =
      generator.is_object() && generator.contains("family")
          ? generator.at("family").get<std::string>()
          : "coverage";
  if (family == "coverage") {
    const int items = generator.is_object() && generator.contains("items")
                          ? generator.at("items").get<int>()
                          : 2 * n;
    return make_coverage_spec(n, items, seed);
  }
  if (family == "line_metric") return make_line_metric_spec(n, seed);
  if (family == "square_metric") return make_square_metric_spec(n, seed);
  if (family == "cut") return make_cut_spec(n, seed);
  if (family == "modular") return make_modular_spec(n, seed);
  throw std::invalid_argument("sweep: unknown generator family '" + family + "'");
}

CommandOutput cmd_sweep(const ExperimentConfig& cfg) {
  if (cfg.sweep_values.empty()) throw std::invalid_argument("sweep: empty value range");
  const std::string axis = cfg.sweep_axis;
  if (axis != "k" && axis != "n" && axis != "seed" && axis != "gamma") {
    throw std::invalid_argument("sweep: axis must be one of k | n | seed | gamma");
  }

  const auto make_row = [&cfg, &axis](double value) -> Json {
    Json row;
    row["axis"] = value;
    row["mean"] = Json();
    row["stderr"] = Json();
    row["opt"] = Json();
    row["empirical_ratio"] = Json();
    row["guarantee"] = Json();
    if (axis == "gamma") {
      row["guarantee"] = factor_weak_asymptotic(value);
      return row;
    }
    OraclePtr f;
    int k = cfg.k;
    std::uint64_t seed = cfg.seed;
    if (axis == "n") {
      const int n = static_cast<int>(value);
      f = build_oracle(generated_spec(cfg.generator, n, derive_seed(cfg.seed, n)), cfg.tol);
    } else {
      if (!cfg.spec) throw std::invalid_argument("sweep: axis '" + axis + "' needs function_spec");
      f = build_oracle(*cfg.spec, cfg.tol);
      if (axis == "k") k = static_cast<int>(value);
      if (axis == "seed") seed = static_cast<std::uint64_t>(value);
    }
    const MonteCarloResult mc = monte_carlo_expectation(*f, k, cfg.trials, seed);
    const TrialSummary s = summarize_trials(*f, k, mc, cfg);
    row["mean"] = mc.mean;
    row["stderr"] = mc.stderr_of_mean;
    row["opt"] = to_json_or_null(s.has_opt, s.opt_value);
    row["empirical_ratio"] = to_json_or_null(s.has_opt, s.empirical_ratio);
    row["guarantee"] = to_json_or_null(s.has_guarantee, s.guarantee_value);
    return row;
  };

  // Grid points are independent; run them on the worker pool but emit rows
  // in grid order regardless of completion order.
  std::vector<Json> rows(cfg.sweep_values.size());
  if (cfg.threads > 1 && cfg.sweep_values.size() > 1) {
    std::vector<std::future<Json>> futures;
    futures.reserve(cfg.sweep_values.size());
    for (double v : cfg.sweep_values) {
      futures.push_back(std::async(std::launch::async, make_row, v));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) rows[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i) {
      rows[i] = make_row(cfg.sweep_values[i]);
    }
  }

  if (cfg.format == "json") {
    Json out;
    out["axis"] = axis;
    out["rows"] = rows;
    return {out.dump(2) + "\n", 0};
  }
  return {summary_csv(axis, rows), 0};
}

}  // namespace

Json to_json(const TrialSummary& s) {
  Json j;
  j["mean"] = s.mc.mean;
  j["stderr"] = s.mc.stderr_of_mean;
  j["min"] = s.mc.min_value;
  j["max"] = s.mc.max_value;
  j["trials"] = s.mc.trials;
  j["opt_value"] = to_json_or_null(s.has_opt, s.opt_value);
  j["empirical_ratio"] = to_json_or_null(s.has_opt, s.empirical_ratio);
  j["exact_expected_value"] = to_json_or_null(s.has_exact, s.exact_expected_value);
  j["guarantee"] = to_json_or_null(s.has_guarantee, s.guarantee_value);
  if (s.has_guarantee) j["guarantee_kind"] = s.guarantee_kind;
  j["pass"] = s.pass;
  return j;
}

ExperimentConfig config_from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  ExperimentConfig cfg;
  if (j.contains("function_spec")) cfg.spec = spec_from_json(j.at("function_spec"), base_dir);
  if (j.contains("mode")) cfg.mode = j.at("mode").get<std::string>();
  if (j.contains("k")) cfg.k = j.at("k").get<int>();
  if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("output_format")) cfg.format = j.at("output_format").get<std::string>();
  if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
  if (j.contains("tolerance")) {
    const Json& t = j.at("tolerance");
    if (t.contains("rel")) cfg.tol.rel = t.at("rel").get<double>();
    if (t.contains("abs")) cfg.tol.abs = t.at("abs").get<double>();
  }
  if (j.contains("family")) cfg.family = j.at("family").get<std::string>();
  if (j.contains("n")) cfg.verify_n = j.at("n").get<int>();
  if (j.contains("instances")) cfg.verify_instances = j.at("instances").get<int>();
  if (j.contains("max_pair_size")) cfg.max_pair_size = j.at("max_pair_size").get<int>();
  if (j.contains("reference")) {
    const Json& r = j.at("reference");
    if (r.is_string() && r.get<std::string>() == "opt") {
      cfg.reference_is_opt = true;
    } else {
      cfg.reference_elements = r.get<std::vector<int>>();
    }
  }
  if (j.contains("pipeline_family")) {
    cfg.pipeline_family = j.at("pipeline_family").get<std::string>();
  }
  if (j.contains("warm_size")) cfg.warm_size = j.at("warm_size").get<long long>();
  if (j.contains("guarantee")) cfg.guarantee = j.at("guarantee");
  if (j.contains("sweep")) {
    const Json& s = j.at("sweep");
    cfg.sweep_axis = s.at("axis").get<std::string>();
    cfg.sweep_values = s.at("values").get<std::vector<double>>();
  }
  if (j.contains("generator")) cfg.generator = j.at("generator");
  if (j.contains("trials") && cfg.trials < 1) {
    throw std::invalid_argument("config: trials must be >= 1");
  }
  if (j.contains("k") && cfg.k < 1) throw std::invalid_argument("config: k must be >= 1");
  return cfg;
}

CommandOutput run_command(const ExperimentConfig& cfg) {
  if (cfg.mode == "maximize") return cmd_maximize(cfg);
  if (cfg.mode == "opt") return cmd_opt(cfg);
  if (cfg.mode == "ratio") return cmd_ratio(cfg);
  if (cfg.mode == "profile") return cmd_profile(cfg);
  if (cfg.mode == "verify") return cmd_verify(cfg);
  if (cfg.mode == "expect") return cmd_expect(cfg);
  if (cfg.mode == "guarantee") return cmd_guarantee(cfg);
  if (cfg.mode == "pipeline") return cmd_pipeline(cfg);
  if (cfg.mode == "sweep") return cmd_sweep(cfg);
  throw std::invalid_argument("unknown mode '" + cfg.mode +
                              "'; expected maximize | opt | ratio | profile | verify | expect | "
                              "guarantee | pipeline | sweep");
}

}  // namespace wsub
