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

#ifndef WSUB_GUARANTEES_HPP_
#define WSUB_GUARANTEES_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wsub {

// Per-iteration ratio bounds gamma_i in [0,1], i = 0..k-1.
void validate_gamma_profile(std::span<const double> gamma, int k);

struct FactorMonotone {
  double exact = 0.0;     // 1 - prod(1 - gamma_j / k)
  double exp_form = 0.0;  // 1 - exp(-sum gamma_j / k); always <= exact
};

// Monotone guarantee from a per-iteration profile.
FactorMonotone factor_monotone(std::span<const double> gamma, int k);

// Per-iteration parameters of the general non-monotone guarantee:
// alpha/beta for the pairs (S_i, OPT) at i = 0..k-1, alpha_bar/beta_bar for
// the pairs (S_{i-1} u OPT, M_i) at i = 1..k (stored 0-based). Componentwise
// 0 <= alpha <= beta <= k must hold.
struct BoundParams {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> alpha_bar;
  std::vector<double> beta_bar;

  void validate(int k) const;
};

// prod_{j=1}^{k-1} min(1 - beta_bar_j/k, 1 - alpha_j/k) * sum_{j=0}^{k-1} alpha_j/k.
double factor_general(const BoundParams& params, int k);

// gamma * exp(-1/gamma): the weak-submodular guarantee as k -> infinity.
double factor_weak_asymptotic(double gamma);
// gamma * exp(-gamma): the pseudo-submodular counterpart.
double factor_pseudo_asymptotic(double gamma);

// Finite-k closed forms gamma (1 - 1/(gamma k))^{k-1} and
// gamma (1 - gamma/k)^{k-1}; the weak form needs gamma >= 1/k to be
// meaningful.
double factor_weak_finite(double gamma, int k);
double factor_pseudo_finite(double gamma, int k);

// (1/(e k)) * sum gamma_i: the non-monotone profile guarantee.
double factor_nonmonotone_profile(std::span<const double> gamma, int k);

// 1 - exp(-(1/k) sum_i g(i,k)) with the proportional-submodularity profile
// g(i,k) = 3i(1+i)/(3i^2+3ik+k^2-1), g(0,k) = 0. Decreasing in k; the large-k
// limit is the 0.197-class constant.
double limit_prop_submod_factor(long long k);

enum class PipelineFamily { kSubmodular, kSubmodPlusMetric, kPropSubmod };

const char* to_name(PipelineFamily family);
std::optional<PipelineFamily> pipeline_family_from_name(const std::string& name);

// Guarantee of the warm-started product pipeline: greedy on the submodular
// factor for warm_size steps (default k/2) reaches quality
// alpha = 1 - exp(-warm_size/k); the warm-start ratio alpha/(1+alpha) then
// multiplies the g-profile inside 1 - exp(-(1/k) sum_{i=warm}^{k-1} ...).
// k must be even when warm_size is defaulted.
double factor_product_pipeline(PipelineFamily family, long long k,
                               std::optional<long long> warm_size = std::nullopt);

// Greedy-halves baselines for the three product problems:
// alpha0^2, alpha0/8, alpha0*0.05 with alpha0 = 1 - exp(-1/2).
struct Baselines {
  double product_submod_submod = 0.0;
  double product_submod_metric_sum = 0.0;
  double product_submod_prop = 0.0;
};
Baselines factor_baselines();

// (1/(k e)) [ (k-m) gamma_bar_1 + sum_{i=0}^{m-1} gamma_bar_i ]: guarantee
// when the algorithm picks m originals; gamma_bar must be non-decreasing
// with entries in [0,1] (length >= m, and >= 2 whenever m < k).
double factor_partial_dummy(long long k, long long m, std::span<const double> gamma_bar);

enum class WarmStartFamily { kSubmodular, kMetricDiversity };

// f(A)/f(A u B) lower bound from a warm start of quality alpha:
// alpha/(1+alpha) for submodular f, alpha/(5+alpha) for metric diversity.
double warm_start_ratio(double alpha, WarmStartFamily family);

}  // namespace wsub

#endif  // WSUB_GUARANTEES_HPP_
