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

#ifndef WSUB_RATIO_HPP_
#define WSUB_RATIO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsub/oracle.hpp"
#include "wsub/subset.hpp"
#include "wsub/tolerance.hpp"
#include "wsub/zoo.hpp"

namespace wsub {

enum class SignClass { kPositive, kNegative, kZero };

const char* to_name(SignClass c);

// Raw data behind a local submodularity ratio: for a disjoint pair (A, B),
// the sum of singleton marginals sum_{e in B} f_A(e) against the joint
// marginal f_A(B). The sign class is that of the joint marginal, where
// |joint| <= max(abs_floor, rel * |f(A)|) counts as zero.
struct PairRatio {
  Subset a, b;
  double base_value = 0.0;  // f(A)
  double sum_marginals = 0.0;
  double joint_marginal = 0.0;
  SignClass sign = SignClass::kZero;

  // sum / joint; only meaningful for positive-class pairs.
  double ratio() const { return sum_marginals / joint_marginal; }
};

// |B| + 2 evaluations (shared base f(A)). Throws on overlap or empty B.
PairRatio local_ratio(const SetFunction& f, const Subset& a, const Subset& b,
                      const Tolerance& tol = {});

struct AbMinimum {
  int a = 0;
  int b = 0;
  double min_ratio = 0.0;  // over positive-class pairs with |A|=a, |B|=b
  long long count = 0;     // positive-class pairs seen at (a, b)
};

// Fit of a global submodularity ratio over enumerated (or sampled) pairs.
// fitted values are clipped to [0, 1]; the raw minimum is also kept because
// non-monotone pairs can push the unclipped constraint above 1.
struct RatioReport {
  bool exhaustive = true;
  long long pairs_scanned = 0;
  long long n_positive = 0;
  long long n_negative = 0;
  long long n_zero = 0;

  bool infeasible = false;
  std::optional<PairRatio> infeasible_witness;

  std::optional<double> fitted_weak_gamma;    // sup feasible, clipped to [0,1]
  double raw_weak_min = 0.0;                  // unclipped upper constraint

  std::optional<double> fitted_pseudo_gamma;  // upper end of feasible interval
  double pseudo_lower_bound = 0.0;            // forced by negative pairs
  double raw_pseudo_min = 0.0;

  std::vector<AbMinimum> minima;              // per-(|A|,|B|) positive minima
};

struct FitOptions {
  int max_pair_size = -1;            // bounds |A| and |B|; -1 means n
  int exhaustive_limit = 16;         // beyond this, sampled mode
  long long sample_pairs = 200000;
  std::uint64_t seed = 0;
  Tolerance tol;
};

// Supremum gamma in (0,1] with sum >= min(gamma*joint, joint/gamma) on every
// pair: positive pairs constrain gamma <= sum/joint, negative pairs with
// sum < 0 constrain gamma <= joint/sum, zero pairs require sum >= -tol.
// Infeasible when a positive pair has sum < 0 or a zero pair has sum < -tol.
RatioReport fit_weak_gamma(const SetFunction& f, int n, const FitOptions& opts = {});

// Supremum gamma in (0,1] with sum >= gamma * joint on every pair. Negative
// pairs with sum < 0 force the lower bound gamma >= sum/joint; the report
// carries the feasible interval and is infeasible when it is empty.
RatioReport fit_pseudo_gamma(const SetFunction& f, int n, const FitOptions& opts = {});

// Per-iteration profile gamma_i = min over positive-class pairs with |A| = i,
// 1 <= |B| <= k of min(1, sum/joint). Levels with no positive-class pair get
// gamma_i = 1 and a vacuous flag. Negative-class pairs are checked separately
// against the min-form requirement sum >= joint.
struct GammaProfileReport {
  std::vector<double> gamma;      // size k, in [0,1]
  std::vector<double> raw_gamma;  // unclipped minima (+inf when vacuous)
  std::vector<bool> vacuous;
  long long n_negative = 0;
  long long n_zero = 0;
  bool negatives_min_form_ok = true;  // sum >= joint on every negative pair
  std::optional<PairRatio> min_form_witness;
};

GammaProfileReport gamma_profile(const SetFunction& f, int n, int k,
                                 const FitOptions& opts = {});

// Analytic per-pair lower bounds, a = |A|, b = |B| (b >= 1 except where
// noted). Each returns 1 for b = 1, where the sum and the joint coincide.
double bound_metric(int a, int b);          // a / (a + b - 1)
double bound_prop_submod(int a, int b);     // 3a(1+a) / (3a^2 + 3ab + b^2 - 1)
double bound_card_scaled(int a, int b);     // (a+1) / (a+b)
double bound_card_divided(int a, int b);    // (a+b) / (a+1), requires a >= 1
// (fA / fAuB) * gamma_g for a monotone factor f; requires 0 <= fA <= fAuB,
// fAuB > 0.
double bound_product(double f_a, double f_aub, double gamma_g);
// T_{a,b} with b * T_{a,b} = (-b + 3a^2 b + 3ab^2 + b^3) / (3a(1+a)); the
// proportional-submodularity bound equals 1/T_{a,b}.
double prop_submod_tab(int a, int b);

// Per-iteration analytic profiles gamma_i (minimum of the pair bound over
// 1 <= |B| <= k at |A| = i).
double metric_gamma_lower(long long i, long long k);        // i/(i+k-1), 0 at i=0
double prop_submod_gamma_lower(long long i, long long k);   // 3i(1+i)/(3i^2+3ik+k^2-1)
double card_scaled_gamma_lower(long long i, long long k);   // (i+1)/(i+k)

enum class BoundFamily {
  kMetric,
  kPropSubmod,
  kCardScaled,
  kCardDivided,
  kProductSubmodSubmod,
  kProductSubmodMetric,
  kProductSubmodProp,
  kSumSubmodMetric,
  kSumSubmodCardCut,
  kSumSubmodProp,
};

const char* to_name(BoundFamily family);
std::optional<BoundFamily> bound_family_from_name(const std::string& name);
std::vector<BoundFamily> all_bound_families();

struct BoundViolation {
  int instance = -1;
  Subset a, b;
  double sum_marginals = 0.0;
  double joint_marginal = 0.0;
  double bound = 0.0;
  std::string detail;
};

struct VerifyReport {
  BoundFamily family{};
  int trials = 0;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  long long pairs_checked = 0;
  bool passed = true;
  std::vector<BoundViolation> violations;  // first violation per instance
};

// Enumerates every disjoint pair (A, B) with 1 <= |B| <= k on `trials` seeded
// random instances of the family and checks the analytic bound empirically:
// positive-class pairs must reach the bound, negative-class pairs (possible
// only for the non-monotone families) must satisfy sum >= joint, zero-class
// pairs must have sum >= -tol. The card_divided family instead certifies the
// proved orientation sum >= joint * (a+b)/(a+1) on every pair with |A| >= 1.
VerifyReport verify_example_bounds(BoundFamily family, int trials, int n, int k,
                                   std::uint64_t seed, const Tolerance& tol = {});

// Same pair scan against a caller-supplied oracle (used for planted
// negative controls). Product families are not supported here since the
// bound needs the factor oracles.
VerifyReport verify_bounds_on_oracle(const SetFunction& f, BoundFamily family, int k,
                                     const Tolerance& tol = {});

struct LemmaCheck {
  bool holds = true;
  long long cases_checked = 0;
  std::string witness;
};

// f_{A+e'}(e) <= (1/a) f_A(e') + (1 + 1/a) f_A(e) for |A| = a >= 1.
LemmaCheck check_base_decrement(const SetFunction& f, const Tolerance& tol = {});
// f_{A+e_1..e_b}(e) <= ((a+b)/a) f_A(e) + ((a+b)/(a(a+1))) sum f_A(e_i).
LemmaCheck check_base_shrink(const SetFunction& f, int max_b, const Tolerance& tol = {});
// b * T_{a,b} identity against the closed form, and bound == 1/T_{a,b}.
LemmaCheck check_tab_cross(int max_a, int max_b, const Tolerance& tol = {});
// a * f(B) <= (b - 1) * d(A, B) on every disjoint pair of a metric instance.
LemmaCheck check_ravi_interset(const DistanceMatrix& d, const Tolerance& tol = {});
// f(A u B) = f(A) + f(B) + d(A, B) on every disjoint pair.
LemmaCheck check_metric_decomposition(const DistanceMatrix& d, const Tolerance& tol = {});

}  // namespace wsub

#endif  // WSUB_RATIO_HPP_
