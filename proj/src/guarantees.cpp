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

#include "wsub/guarantees.hpp"

#include <cmath>
#include <stdexcept>

#include "wsub/ratio.hpp"

namespace wsub {

void validate_gamma_profile(std::span<const double> gamma, int k) {
  if (k < 1) throw std::invalid_argument("gamma profile: k must be >= 1");
  if (static_cast<int>(gamma.size()) != k) {
    throw std::invalid_argument("gamma profile: expected exactly k entries, got " +
                                std::to_string(gamma.size()));
  }
  for (double g : gamma) {
    if (!(g >= 0.0 && g <= 1.0)) {
      throw std::invalid_argument("gamma profile: entries must lie in [0, 1]");
    }
  }
}

FactorMonotone factor_monotone(std::span<const double> gamma, int k) {
  validate_gamma_profile(gamma, k);
  double prod = 1.0;
  double sum = 0.0;
  for (double g : gamma) {
    prod *= 1.0 - g / k;
    sum += g / k;
  }
  return FactorMonotone{1.0 - prod, 1.0 - std::exp(-sum)};
}

void BoundParams::validate(int k) const {
  if (k < 1) throw std::invalid_argument("BoundParams: k must be >= 1");
  const auto expect_size = [k](const std::vector<double>& v, const char* name) {
    if (static_cast<int>(v.size()) != k) {
      throw std::invalid_argument(std::string("BoundParams: ") + name +
                                  " must have exactly k entries");
    }
  };
  expect_size(alpha, "alpha");
  expect_size(beta, "beta");
  expect_size(alpha_bar, "alpha_bar");
  expect_size(beta_bar, "beta_bar");
  for (int i = 0; i < k; ++i) {
    if (!(0.0 <= alpha[i] && alpha[i] <= beta[i] && beta[i] <= k)) {
      throw std::invalid_argument("BoundParams: need 0 <= alpha_i <= beta_i <= k at i=" +
                                  std::to_string(i));
    }
    if (!(0.0 <= alpha_bar[i] && alpha_bar[i] <= beta_bar[i] && beta_bar[i] <= k)) {
      throw std::invalid_argument("BoundParams: need 0 <= alpha_bar_i <= beta_bar_i <= k at i=" +
                                  std::to_string(i));
    }
  }
}

double factor_general(const BoundParams& params, int k) {
  params.validate(k);
  double prod = 1.0;
  for (int j = 1; j <= k - 1; ++j) {
    prod *= std::min(1.0 - params.beta_bar[j - 1] / k, 1.0 - params.alpha[j] / k);
  }
  double sum = 0.0;
  for (int j = 0; j < k; ++j) sum += params.alpha[j] / k;
  return prod * sum;
}

double factor_weak_asymptotic(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("factor_weak_asymptotic: gamma must be in (0, 1]");
  }
  return gamma * std::exp(-1.0 / gamma);
}

double factor_pseudo_asymptotic(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("factor_pseudo_asymptotic: gamma must be in (0, 1]");
  }
  return gamma * std::exp(-gamma);
}

double factor_weak_finite(double gamma, int k) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("factor_weak_finite: gamma must be in (0, 1]");
  }
  if (k < 1) throw std::invalid_argument("factor_weak_finite: k must be >= 1");
  return gamma * std::pow(1.0 - 1.0 / (gamma * k), k - 1);
}

double factor_pseudo_finite(double gamma, int k) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("factor_pseudo_finite: gamma must be in (0, 1]");
  }
  if (k < 1) throw std::invalid_argument("factor_pseudo_finite: k must be >= 1");
  return gamma * std::pow(1.0 - gamma / k, k - 1);
}

double factor_nonmonotone_profile(std::span<const double> gamma, int k) {
  validate_gamma_profile(gamma, k);
  double sum = 0.0;
  for (double g : gamma) sum += g;
  return sum / (std::exp(1.0) * k);
}

double limit_prop_submod_factor(long long k) {
  if (k < 2) throw std::invalid_argument("limit_prop_submod_factor: k must be >= 2");
  double sum = 0.0;
  for (long long i = 1; i < k; ++i) sum += prop_submod_gamma_lower(i, k);
  return 1.0 - std::exp(-sum / static_cast<double>(k));
}

const char* to_name(PipelineFamily family) {
  switch (family) {
    case PipelineFamily::kSubmodular:
      return "submodular";
    case PipelineFamily::kSubmodPlusMetric:
      return "submod_plus_metric";
    case PipelineFamily::kPropSubmod:
      return "prop_submod";
  }
  return "?";
}

std::optional<PipelineFamily> pipeline_family_from_name(const std::string& name) {
  for (PipelineFamily f :
       {PipelineFamily::kSubmodular, PipelineFamily::kSubmodPlusMetric,
        PipelineFamily::kPropSubmod}) {
    if (name == to_name(f)) return f;
  }
  return std::nullopt;
}

double factor_product_pipeline(PipelineFamily family, long long k,
                               std::optional<long long> warm_size) {
  if (k < 2) throw std::invalid_argument("factor_product_pipeline: k must be >= 2");
  if (!warm_size && k % 2 != 0) {
    throw std::invalid_argument("factor_product_pipeline: k must be even (warm start is k/2)");
  }
  const long long m = warm_size ? *warm_size : k / 2;
  if (m < 1 || m >= k) {
    throw std::invalid_argument("factor_product_pipeline: warm size must be in [1, k-1]");
  }
  const double alpha = 1.0 - std::exp(-static_cast<double>(m) / static_cast<double>(k));
  const double ratio = alpha / (1.0 + alpha);
  double sum = 0.0;
  for (long long i = m; i < k; ++i) {
    double g = 0.0;
    switch (family) {
      case PipelineFamily::kSubmodular:
        g = 1.0;
        break;
      case PipelineFamily::kSubmodPlusMetric:
        g = metric_gamma_lower(i, k);
        break;
      case PipelineFamily::kPropSubmod:
        g = prop_submod_gamma_lower(i, k);
        break;
    }
    sum += ratio * g;
  }
  return 1.0 - std::exp(-sum / static_cast<double>(k));
}

Baselines factor_baselines() {
  const double alpha0 = 1.0 - std::exp(-0.5);
  Baselines out;
  out.product_submod_submod = alpha0 * alpha0;
  out.product_submod_metric_sum = alpha0 * (1.0 / 8.0);
  out.product_submod_prop = alpha0 * 0.05;
  return out;
}

double factor_partial_dummy(long long k, long long m, std::span<const double> gamma_bar) {
  if (k < 1) throw std::invalid_argument("factor_partial_dummy: k must be >= 1");
  if (m < 1 || m > k) throw std::invalid_argument("factor_partial_dummy: m must be in [1, k]");
  const long long needed = m < k ? std::max<long long>(m, 2) : m;
  if (static_cast<long long>(gamma_bar.size()) < needed) {
    throw std::invalid_argument("factor_partial_dummy: gamma_bar needs at least " +
                                std::to_string(needed) + " entries");
  }
  double prev = -1.0;
  for (double g : gamma_bar) {
    if (!(g >= 0.0 && g <= 1.0)) {
      throw std::invalid_argument("factor_partial_dummy: gamma_bar entries must be in [0, 1]");
    }
    if (g < prev) {
      throw std::invalid_argument("factor_partial_dummy: gamma_bar must be non-decreasing");
    }
    prev = g;
  }
  double bracket = m < k ? static_cast<double>(k - m) * gamma_bar[1] : 0.0;
  for (long long i = 0; i < m; ++i) bracket += gamma_bar[static_cast<std::size_t>(i)];
  return bracket / (static_cast<double>(k) * std::exp(1.0));
}

double warm_start_ratio(double alpha, WarmStartFamily family) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("warm_start_ratio: alpha must be in (0, 1]");
  }
  switch (family) {
    case WarmStartFamily::kSubmodular:
      return alpha / (1.0 + alpha);
    case WarmStartFamily::kMetricDiversity:
      return alpha / (5.0 + alpha);
  }
  throw std::invalid_argument("warm_start_ratio: unknown family");
}

}  // namespace wsub
