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

#include "wsub/ratio.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wsub/rng.hpp"
#include "wsub/zoo.hpp"

namespace wsub {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int popcount32(std::uint32_t x) { return std::popcount(x); }

SignClass classify(double joint, double base, const Tolerance& tol) {
  if (std::fabs(joint) <= tol.slack(base)) return SignClass::kZero;
  return joint > 0 ? SignClass::kPositive : SignClass::kNegative;
}

}  // namespace

const char* to_name(SignClass c) {
  switch (c) {
    case SignClass::kPositive:
      return "positive";
    case SignClass::kNegative:
      return "negative";
    case SignClass::kZero:
      return "zero";
  }
  return "?";
}

PairRatio local_ratio(const SetFunction& f, const Subset& a, const Subset& b,
                      const Tolerance& tol) {
  if (!a.disjoint_with(b)) throw std::invalid_argument("local_ratio: A and B must be disjoint");
  if (b.empty()) throw std::invalid_argument("local_ratio: B must be non-empty");
  PairRatio out;
  out.a = a;
  out.b = b;
  out.base_value = f.value(a);
  out.sum_marginals = 0.0;
  for (int e : b.elements()) out.sum_marginals += f.value(a.with(e)) - out.base_value;
  out.joint_marginal = f.value(a | b) - out.base_value;
  out.sign = classify(out.joint_marginal, out.base_value, tol);
  return out;
}

// ---------------------------------------------------------------------------
// Pair scans
// ---------------------------------------------------------------------------

namespace {

// One enumerated pair handed to the scan callback (mask-level, table-backed).
struct PairView {
  std::uint32_t a_mask = 0;
  std::uint32_t b_mask = 0;
  int a = 0;
  int b = 0;
  double base = 0.0;
  double sum = 0.0;
  double joint = 0.0;
  SignClass sign = SignClass::kZero;
};

PairRatio to_pair_ratio(const PairView& v, int n) {
  PairRatio r;
  r.a = Subset::from_mask(n, v.a_mask);
  r.b = Subset::from_mask(n, v.b_mask);
  r.base_value = v.base;
  r.sum_marginals = v.sum;
  r.joint_marginal = v.joint;
  r.sign = v.sign;
  return r;
}

// Calls fn for every disjoint pair (A, B) with |A| <= max_a, 1 <= |B| <= max_b.
// fn returning false stops the scan.
template <typename Fn>
void scan_pairs(const ValueTable& tab, int max_a, int max_b, const Tolerance& tol, Fn&& fn) {
  const int n = tab.n();
  const std::uint32_t total = 1u << n;
  std::vector<double> single(static_cast<std::size_t>(n), 0.0);
  for (std::uint32_t a_mask = 0; a_mask < total; ++a_mask) {
    const int a = popcount32(a_mask);
    if (a > max_a) continue;
    const double base = tab[a_mask];
    const std::uint32_t comp = (total - 1) & ~a_mask;
    for (int e = 0; e < n; ++e) {
      if ((comp >> e) & 1u) single[e] = tab[a_mask | (1u << e)] - base;
    }
    for (std::uint32_t b_mask = comp; b_mask != 0; b_mask = (b_mask - 1) & comp) {
      const int b = popcount32(b_mask);
      if (b > max_b) continue;
      PairView v;
      v.a_mask = a_mask;
      v.b_mask = b_mask;
      v.a = a;
      v.b = b;
      v.base = base;
      v.joint = tab[a_mask | b_mask] - base;
      v.sum = 0.0;
      for (std::uint32_t bits = b_mask; bits != 0; bits &= bits - 1) {
        v.sum += single[std::countr_zero(bits)];
      }
      v.sign = classify(v.joint, base, tol);
      if (!fn(v)) return;
    }
  }
}

struct FitAccumulator {
  const Tolerance& tol;
  RatioReport report;
  double weak_ub = kInf;
  double pseudo_ub = kInf;
  double pseudo_lb = 0.0;
  std::vector<AbMinimum> grid;  // indexed a * (max_b + 1) + b
  int max_a = 0, max_b = 0;

  FitAccumulator(const Tolerance& t, int ma, int mb) : tol(t), max_a(ma), max_b(mb) {
    grid.assign(static_cast<std::size_t>(ma + 1) * (mb + 1), AbMinimum{});
  }

  // Returns false once infeasibility is witnessed (scan may stop).
  bool consume(const PairView& v, int n) {
    ++report.pairs_scanned;
    const double scale = std::max({std::fabs(v.base), std::fabs(v.sum), std::fabs(v.joint)});
    switch (v.sign) {
      case SignClass::kPositive: {
        ++report.n_positive;
        if (v.sum < -tol.slack(scale)) {
          report.infeasible = true;
          report.infeasible_witness = to_pair_ratio(v, n);
          return false;
        }
        const double r = std::max(0.0, v.sum) / v.joint;
        weak_ub = std::min(weak_ub, r);
        pseudo_ub = std::min(pseudo_ub, r);
        AbMinimum& cell = grid[static_cast<std::size_t>(v.a) * (max_b + 1) + v.b];
        if (cell.count == 0 || r < cell.min_ratio) cell.min_ratio = r;
        cell.a = v.a;
        cell.b = v.b;
        ++cell.count;
        return true;
      }
      case SignClass::kNegative: {
        ++report.n_negative;
        if (v.sum < -tol.slack(scale)) {
          // sum and joint both negative: weak needs gamma <= joint/sum,
          // pseudo needs gamma >= sum/joint.
          weak_ub = std::min(weak_ub, v.joint / v.sum);
          pseudo_lb = std::max(pseudo_lb, v.sum / v.joint);
        }
        return true;
      }
      case SignClass::kZero: {
        ++report.n_zero;
        if (v.sum < -tol.slack(scale)) {
          report.infeasible = true;
          report.infeasible_witness = to_pair_ratio(v, n);
          return false;
        }
        return true;
      }
    }
    return true;
  }

  // Ratios sit within float rounding of their true value; a constraint of
  // 1 - 1e-16 from a submodular oracle still means gamma = 1 under the
  // declared comparison tolerance, so the clipped value snaps to the
  // boundary.
  double snap_unit(double v) const {
    v = std::clamp(v, 0.0, 1.0);
    return 1.0 - v <= tol.rel ? 1.0 : v;
  }

  RatioReport finish(bool weak_mode) {
    report.raw_weak_min = weak_ub;
    report.raw_pseudo_min = pseudo_ub;
    report.pseudo_lower_bound = pseudo_lb;
    for (const AbMinimum& cell : grid) {
      if (cell.count > 0) report.minima.push_back(cell);
    }
    if (weak_mode) {
      if (!report.infeasible) {
        report.fitted_weak_gamma = snap_unit(weak_ub);
      }
    } else {
      const double hi = std::min(pseudo_ub, 1.0);
      if (!report.infeasible && pseudo_lb > hi + 1e-12) {
        report.infeasible = true;
      }
      if (!report.infeasible) {
        report.fitted_pseudo_gamma = snap_unit(hi);
      }
    }
    return report;
  }
};

RatioReport fit_gamma(const SetFunction& f, int n, const FitOptions& opts, bool weak_mode) {
  if (n != f.capacity()) {
    throw std::invalid_argument("fit_gamma: n must match the oracle's ground-set size");
  }
  const int max_pair = opts.max_pair_size < 0 ? n : std::min(opts.max_pair_size, n);
  if (max_pair < 1) throw std::invalid_argument("fit_gamma: max_pair_size must be >= 1");

  if (n <= opts.exhaustive_limit) {
    const ValueTable tab(f);
    FitAccumulator acc(opts.tol, max_pair, max_pair);
    scan_pairs(tab, max_pair, max_pair, opts.tol,
               [&](const PairView& v) { return acc.consume(v, n); });
    return acc.finish(weak_mode);
  }

  // Sampled mode: uniformly random disjoint pairs with the declared budget.
  FitAccumulator acc(opts.tol, max_pair, max_pair);
  acc.report.exhaustive = false;
  SplitMix64 rng(opts.seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (long long t = 0; t < opts.sample_pairs; ++t) {
    const int a = static_cast<int>(rng.below(static_cast<std::uint32_t>(max_pair + 1)));
    const int b = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_pair)));
    if (a + b > n) continue;
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = 0; i < a + b; ++i) {
      const int j = i + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - i)));
      std::swap(perm[i], perm[j]);
    }
    Subset sa(n), sb(n);
    for (int i = 0; i < a; ++i) sa.add(perm[i]);
    for (int i = a; i < a + b; ++i) sb.add(perm[i]);
    const PairRatio pr = local_ratio(f, sa, sb, opts.tol);
    PairView v;
    v.a_mask = 0;
    v.b_mask = 0;
    v.a = a;
    v.b = b;
    v.base = pr.base_value;
    v.sum = pr.sum_marginals;
    v.joint = pr.joint_marginal;
    v.sign = pr.sign;
    if (!acc.consume(v, 0)) {
      acc.report.infeasible_witness = pr;  // keep real subsets, not masks
      break;
    }
  }
  return acc.finish(weak_mode);
}

}  // namespace

RatioReport fit_weak_gamma(const SetFunction& f, int n, const FitOptions& opts) {
  return fit_gamma(f, n, opts, /*weak_mode=*/true);
}

RatioReport fit_pseudo_gamma(const SetFunction& f, int n, const FitOptions& opts) {
  return fit_gamma(f, n, opts, /*weak_mode=*/false);
}

GammaProfileReport gamma_profile(const SetFunction& f, int n, int k, const FitOptions& opts) {
  if (n != f.capacity()) {
    throw std::invalid_argument("gamma_profile: n must match the oracle's ground-set size");
  }
  if (k < 1) throw std::invalid_argument("gamma_profile: k must be >= 1");
  if (n > opts.exhaustive_limit) {
    throw std::invalid_argument("gamma_profile: n = " + std::to_string(n) +
                                " exceeds the exhaustive guard (n <= " +
                                std::to_string(opts.exhaustive_limit) + ")");
  }
  const ValueTable tab(f);
  GammaProfileReport out;
  out.raw_gamma.assign(static_cast<std::size_t>(k), kInf);
  out.vacuous.assign(static_cast<std::size_t>(k), true);
  scan_pairs(tab, k - 1, std::min(k, n), opts.tol, [&](const PairView& v) {
    switch (v.sign) {
      case SignClass::kPositive: {
        const double r = v.sum / v.joint;
        auto& slot = out.raw_gamma[static_cast<std::size_t>(v.a)];
        slot = std::min(slot, r);
        out.vacuous[static_cast<std::size_t>(v.a)] = false;
        break;
      }
      case SignClass::kNegative: {
        ++out.n_negative;
        const double scale = std::max({std::fabs(v.base), std::fabs(v.sum), std::fabs(v.joint)});
        if (out.negatives_min_form_ok && v.sum < v.joint - opts.tol.slack(scale)) {
          out.negatives_min_form_ok = false;
          out.min_form_witness = to_pair_ratio(v, n);
        }
        break;
      }
      case SignClass::kZero:
        ++out.n_zero;
        break;
    }
    return true;
  });
  out.gamma.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    // A level with no positive-class pair imposes no constraint. Clipped
    // values within rounding of 1 snap to the boundary.
    double g = out.vacuous[i] ? 1.0 : std::clamp(out.raw_gamma[i], 0.0, 1.0);
    if (1.0 - g <= opts.tol.rel) g = 1.0;
    out.gamma[i] = g;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Analytic bounds
// ---------------------------------------------------------------------------

double bound_metric(int a, int b) {
  if (a < 0 || b < 1) throw std::invalid_argument("bound_metric: requires a >= 0, b >= 1");
  if (b == 1) return 1.0;
  return static_cast<double>(a) / static_cast<double>(a + b - 1);
}

double bound_prop_submod(int a, int b) {
  if (a < 0 || b < 1) throw std::invalid_argument("bound_prop_submod: requires a >= 0, b >= 1");
  if (b == 1) return 1.0;
  const double ad = a, bd = b;
  return 3.0 * ad * (1.0 + ad) / (3.0 * ad * ad + 3.0 * ad * bd + bd * bd - 1.0);
}

double bound_card_scaled(int a, int b) {
  if (a < 0 || b < 1) throw std::invalid_argument("bound_card_scaled: requires a >= 0, b >= 1");
  return static_cast<double>(a + 1) / static_cast<double>(a + b);
}

double bound_card_divided(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("bound_card_divided: requires a >= 1, b >= 1");
  return static_cast<double>(a + b) / static_cast<double>(a + 1);
}

double bound_product(double f_a, double f_aub, double gamma_g) {
  if (!(f_aub > 0.0) || f_a > f_aub || f_a < 0.0) {
    throw std::invalid_argument("bound_product: requires 0 <= f(A) <= f(AuB) and f(AuB) > 0");
  }
  if (gamma_g < 0.0 || gamma_g > 1.0) {
    throw std::invalid_argument("bound_product: gamma_g must be in [0, 1]");
  }
  return f_a / f_aub * gamma_g;
}

double prop_submod_tab(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("prop_submod_tab: requires a >= 1, b >= 1");
  const double ad = a, bd = b;
  return (3.0 * ad * ad + 3.0 * ad * bd + bd * bd - 1.0) / (3.0 * ad * (1.0 + ad));
}

double metric_gamma_lower(long long i, long long k) {
  if (i < 0 || k < 1) throw std::invalid_argument("metric_gamma_lower: requires i >= 0, k >= 1");
  if (i == 0) return k == 1 ? 1.0 : 0.0;
  return static_cast<double>(i) / static_cast<double>(i + k - 1);
}

double prop_submod_gamma_lower(long long i, long long k) {
  if (i < 0 || k < 1) {
    throw std::invalid_argument("prop_submod_gamma_lower: requires i >= 0, k >= 1");
  }
  if (k == 1) return 1.0;
  if (i == 0) return 0.0;
  const double id = static_cast<double>(i), kd = static_cast<double>(k);
  return 3.0 * id * (1.0 + id) / (3.0 * id * id + 3.0 * id * kd + kd * kd - 1.0);
}

double card_scaled_gamma_lower(long long i, long long k) {
  if (i < 0 || k < 1) {
    throw std::invalid_argument("card_scaled_gamma_lower: requires i >= 0, k >= 1");
  }
  return static_cast<double>(i + 1) / static_cast<double>(i + k);
}

// ---------------------------------------------------------------------------
// Family verification
// ---------------------------------------------------------------------------

const char* to_name(BoundFamily family) {
  switch (family) {
    case BoundFamily::kMetric:
      return "metric";
    case BoundFamily::kPropSubmod:
      return "prop_submod";
    case BoundFamily::kCardScaled:
      return "card_scaled";
    case BoundFamily::kCardDivided:
      return "card_divided";
    case BoundFamily::kProductSubmodSubmod:
      return "product_submod_submod";
    case BoundFamily::kProductSubmodMetric:
      return "product_submod_metric";
    case BoundFamily::kProductSubmodProp:
      return "product_submod_prop";
    case BoundFamily::kSumSubmodMetric:
      return "sum_submod_metric";
    case BoundFamily::kSumSubmodCardCut:
      return "sum_submod_cardcut";
    case BoundFamily::kSumSubmodProp:
      return "sum_submod_prop";
  }
  return "?";
}

std::vector<BoundFamily> all_bound_families() {
  return {BoundFamily::kMetric,
          BoundFamily::kPropSubmod,
          BoundFamily::kCardScaled,
          BoundFamily::kCardDivided,
          BoundFamily::kProductSubmodSubmod,
          BoundFamily::kProductSubmodMetric,
          BoundFamily::kProductSubmodProp,
          BoundFamily::kSumSubmodMetric,
          BoundFamily::kSumSubmodCardCut,
          BoundFamily::kSumSubmodProp};
}

std::optional<BoundFamily> bound_family_from_name(const std::string& name) {
  for (BoundFamily f : all_bound_families()) {
    if (name == to_name(f)) return f;
  }
  return std::nullopt;
}

namespace {

bool family_is_nonmonotone(BoundFamily family) {
  switch (family) {
    case BoundFamily::kCardScaled:
    case BoundFamily::kCardDivided:
    case BoundFamily::kSumSubmodCardCut:
    case BoundFamily::kSumSubmodProp:
      return true;
    default:
      return false;
  }
}

struct FamilyInstance {
  OraclePtr h;
  OraclePtr f_part;  // product families only
  OraclePtr g_part;
};

FunctionSpec metric_spec_for(int n, std::uint64_t seed, int index) {
  return index % 2 == 0 ? make_line_metric_spec(n, seed) : make_square_metric_spec(n, seed);
}

FamilyInstance make_family_instance(BoundFamily family, int n, std::uint64_t seed, int index) {
  const std::uint64_t s0 = derive_seed(seed, static_cast<std::uint64_t>(3 * index));
  const std::uint64_t s1 = derive_seed(seed, static_cast<std::uint64_t>(3 * index + 1));
  FamilyInstance inst;
  switch (family) {
    case BoundFamily::kMetric:
      inst.h = build_oracle(metric_spec_for(n, s0, index));
      return inst;
    case BoundFamily::kPropSubmod: {
      // Monotone proportionally submodular: coverage + metric diversity.
      // Certified by the exhaustive pair scan; regenerate on the rare miss.
      for (std::uint64_t attempt = 0;; ++attempt) {
        FunctionSpec spec = FunctionSpec::sum(
            {make_coverage_spec(n, 2 * n, derive_seed(s0, attempt)),
             metric_spec_for(n, derive_seed(s1, attempt), index)});
        OraclePtr h = build_oracle(spec);
        if (check_proportionally_submodular(*h).holds) {
          inst.h = std::move(h);
          return inst;
        }
      }
    }
    case BoundFamily::kCardScaled:
      inst.h = build_oracle(FunctionSpec::card_scaled(make_cut_spec(n, s0)));
      return inst;
    case BoundFamily::kCardDivided:
      inst.h = build_oracle(FunctionSpec::card_divided(make_cut_spec(n, s0)));
      return inst;
    case BoundFamily::kProductSubmodSubmod:
      inst.f_part = build_oracle(make_coverage_spec(n, 2 * n, s0));
      inst.g_part = build_oracle(make_coverage_spec(n, 2 * n, s1));
      break;
    case BoundFamily::kProductSubmodMetric:
      inst.f_part = build_oracle(make_coverage_spec(n, 2 * n, s0));
      inst.g_part = build_oracle(metric_spec_for(n, s1, index));
      break;
    case BoundFamily::kProductSubmodProp: {
      inst.f_part = build_oracle(make_coverage_spec(n, 2 * n, s0));
      for (std::uint64_t attempt = 0;; ++attempt) {
        FunctionSpec g = FunctionSpec::sum(
            {make_coverage_spec(n, 2 * n, derive_seed(s1, attempt)),
             metric_spec_for(n, derive_seed(s1, attempt + 1000), index)});
        OraclePtr gp = build_oracle(g);
        if (check_proportionally_submodular(*gp).holds) {
          inst.g_part = std::move(gp);
          break;
        }
      }
      break;
    }
    case BoundFamily::kSumSubmodMetric:
      inst.h = build_oracle(FunctionSpec::sum(
          {make_coverage_spec(n, 2 * n, s0), metric_spec_for(n, s1, index)}));
      return inst;
    case BoundFamily::kSumSubmodCardCut:
      inst.h = build_oracle(FunctionSpec::sum(
          {make_coverage_spec(n, 2 * n, s0),
           FunctionSpec::card_scaled(make_cut_spec(n, s1))}));
      return inst;
    case BoundFamily::kSumSubmodProp:
      inst.h = build_oracle(FunctionSpec::sum(
          {make_coverage_spec(n, 2 * n, s0), make_nonmonotone_prop_submod_spec(n, s1)}));
      return inst;
  }
  // Product families: parts are set, h is assembled by the caller.
  return inst;
}

// Pair rule shared by verify_example_bounds and verify_bounds_on_oracle.
struct BoundScan {
  BoundFamily family;
  const Tolerance& tol;
  const ValueTable* f_tab = nullptr;  // product families
  const ValueTable* g_tab = nullptr;

  double pair_bound(const PairView& v) const {
    switch (family) {
      case BoundFamily::kMetric:
      case BoundFamily::kSumSubmodMetric:
        return bound_metric(v.a, v.b);
      case BoundFamily::kPropSubmod:
      case BoundFamily::kSumSubmodProp:
        return bound_prop_submod(v.a, v.b);
      case BoundFamily::kCardScaled:
      case BoundFamily::kSumSubmodCardCut:
        return bound_card_scaled(v.a, v.b);
      case BoundFamily::kCardDivided:
        return bound_card_divided(std::max(v.a, 1), v.b);
      case BoundFamily::kProductSubmodSubmod: {
        const double rf = factor_ratio(*f_tab, v);
        const double rg = factor_ratio(*g_tab, v);
        return std::max(rf, rg);
      }
      case BoundFamily::kProductSubmodMetric:
        return factor_ratio(*f_tab, v) * bound_metric(v.a, v.b);
      case BoundFamily::kProductSubmodProp:
        return factor_ratio(*f_tab, v) * bound_prop_submod(v.a, v.b);
    }
    return 0.0;
  }

  static double factor_ratio(const ValueTable& tab, const PairView& v) {
    const double num = tab[v.a_mask];
    const double den = tab[v.a_mask | v.b_mask];
    if (!(den > 0.0)) return 0.0;  // monotone factor identically 0 on A u B
    return num / den;
  }

  // Returns an empty string when the pair satisfies the family rule.
  std::string check(const PairView& v) const {
    const double scale = std::max({std::fabs(v.base), std::fabs(v.sum), std::fabs(v.joint)});
    const double slack = tol.slack(scale);
    if (family == BoundFamily::kCardDivided) {
      // Proved orientation: sum >= joint * (a+b)/(a+1) for every pair with
      // a >= 1, regardless of the sign of the joint marginal.
      if (v.a < 1) return "";
      const double coeff = bound_card_divided(v.a, v.b);
      if (v.sum < coeff * v.joint - slack) {
        return "sum < ((a+b)/(a+1)) * joint";
      }
      return "";
    }
    switch (v.sign) {
      case SignClass::kPositive: {
        const double bound = pair_bound(v);
        if (v.sum < bound * v.joint - slack) {
          return "positive-class pair below the analytic bound";
        }
        return "";
      }
      case SignClass::kNegative: {
        if (!family_is_nonmonotone(family)) {
          return "negative joint marginal on a monotone family";
        }
        // Weak-submodularity min-form certificate for bounds <= 1.
        if (v.sum < v.joint - slack) {
          return "negative-class pair violates sum >= joint";
        }
        return "";
      }
      case SignClass::kZero: {
        if (v.sum < -slack) {
          return "zero-class pair with negative singleton sum";
        }
        return "";
      }
    }
    return "";
  }
};

}  // namespace

VerifyReport verify_example_bounds(BoundFamily family, int trials, int n, int k,
                                   std::uint64_t seed, const Tolerance& tol) {
  if (trials < 1) throw std::invalid_argument("verify_example_bounds: trials must be >= 1");
  if (n < 2 || n > 12) {
    throw std::invalid_argument("verify_example_bounds: n must be in [2, 12] (exhaustive scan)");
  }
  if (k < 1 || k > n) throw std::invalid_argument("verify_example_bounds: k must be in [1, n]");
  VerifyReport report;
  report.family = family;
  report.trials = trials;
  report.n = n;
  report.k = k;
  report.seed = seed;

  for (int t = 0; t < trials; ++t) {
    FamilyInstance inst = make_family_instance(family, n, seed, t);
    OraclePtr h = inst.h;
    std::optional<ValueTable> f_tab, g_tab;
    if (!h) {
      // Product family: h = f * g built from parts.
      f_tab.emplace(*inst.f_part);
      g_tab.emplace(*inst.g_part);
      struct ProductView final : SetFunction {
        OraclePtr fa, fb;
        ProductView(OraclePtr a, OraclePtr b)
            : SetFunction(GroundSet{a->n_original(), 0}, "product"), fa(a), fb(b) {}
        double eval(const Subset& s) const override { return fa->value(s) * fb->value(s); }
      };
      h = std::make_shared<ProductView>(inst.f_part, inst.g_part);
    }
    const ValueTable tab(*h);
    BoundScan scan{family, tol, f_tab ? &*f_tab : nullptr, g_tab ? &*g_tab : nullptr};
    bool instance_ok = true;
    scan_pairs(tab, n, std::min(k, n), tol, [&](const PairView& v) {
      ++report.pairs_checked;
      const std::string problem = scan.check(v);
      if (!problem.empty()) {
        BoundViolation violation;
        violation.instance = t;
        violation.a = Subset::from_mask(n, v.a_mask);
        violation.b = Subset::from_mask(n, v.b_mask);
        violation.sum_marginals = v.sum;
        violation.joint_marginal = v.joint;
        violation.bound =
            family == BoundFamily::kCardDivided && v.a >= 1
                ? bound_card_divided(v.a, v.b)
                : (v.sign == SignClass::kPositive ? scan.pair_bound(v) : 1.0);
        violation.detail = problem;
        report.violations.push_back(std::move(violation));
        instance_ok = false;
        return false;  // first violation per instance
      }
      return true;
    });
    if (!instance_ok) report.passed = false;
  }
  return report;
}

VerifyReport verify_bounds_on_oracle(const SetFunction& f, BoundFamily family, int k,
                                     const Tolerance& tol) {
  switch (family) {
    case BoundFamily::kProductSubmodSubmod:
    case BoundFamily::kProductSubmodMetric:
    case BoundFamily::kProductSubmodProp:
      throw std::invalid_argument(
          "verify_bounds_on_oracle: product families need factor oracles; "
          "use verify_example_bounds");
    default:
      break;
  }
  const int n = f.capacity();
  if (n > 12) {
    throw std::invalid_argument("verify_bounds_on_oracle: n must be <= 12 (exhaustive scan)");
  }
  VerifyReport report;
  report.family = family;
  report.trials = 1;
  report.n = n;
  report.k = k;
  const ValueTable tab(f);
  BoundScan scan{family, tol, nullptr, nullptr};
  scan_pairs(tab, n, std::min(k, n), tol, [&](const PairView& v) {
    ++report.pairs_checked;
    const std::string problem = scan.check(v);
    if (!problem.empty()) {
      BoundViolation violation;
      violation.instance = 0;
      violation.a = Subset::from_mask(n, v.a_mask);
      violation.b = Subset::from_mask(n, v.b_mask);
      violation.sum_marginals = v.sum;
      violation.joint_marginal = v.joint;
      violation.bound = v.sign == SignClass::kPositive ? scan.pair_bound(v) : 1.0;
      violation.detail = problem;
      report.violations.push_back(std::move(violation));
      report.passed = false;
      return false;
    }
    return true;
  });
  return report;
}

// ---------------------------------------------------------------------------
// Structural lemma checks
// ---------------------------------------------------------------------------

LemmaCheck check_base_decrement(const SetFunction& f, const Tolerance& tol) {
  const int n = f.capacity();
  const ValueTable tab(f);
  const double slack = tol.slack(static_cast<double>(n) * tab.max_abs());
  LemmaCheck out;
  const std::uint32_t total = 1u << n;
  for (std::uint32_t a_mask = 0; a_mask < total; ++a_mask) {
    const int a = popcount32(a_mask);
    if (a < 1) continue;
    const double base = tab[a_mask];
    for (int ep = 0; ep < n; ++ep) {
      if ((a_mask >> ep) & 1u) continue;
      const std::uint32_t ap = a_mask | (1u << ep);
      for (int e = 0; e < n; ++e) {
        if (e == ep || ((a_mask >> e) & 1u)) continue;
        ++out.cases_checked;
        const double lhs = tab[ap | (1u << e)] - tab[ap];
        const double rhs = (tab[a_mask | (1u << ep)] - base) / a +
                           (1.0 + 1.0 / a) * (tab[a_mask | (1u << e)] - base);
        if (lhs > rhs + slack) {
          out.holds = false;
          out.witness = "A=" + Subset::from_mask(n, a_mask).to_string() +
                        " e'=" + std::to_string(ep) + " e=" + std::to_string(e);
          return out;
        }
      }
    }
  }
  return out;
}

LemmaCheck check_base_shrink(const SetFunction& f, int max_b, const Tolerance& tol) {
  const int n = f.capacity();
  const ValueTable tab(f);
  const double slack = tol.slack(static_cast<double>(n) * tab.max_abs());
  LemmaCheck out;
  const std::uint32_t total = 1u << n;
  for (std::uint32_t a_mask = 0; a_mask < total; ++a_mask) {
    const int a = popcount32(a_mask);
    if (a < 1) continue;
    const double base = tab[a_mask];
    const std::uint32_t comp = (total - 1) & ~a_mask;
    for (std::uint32_t b_mask = comp; b_mask != 0; b_mask = (b_mask - 1) & comp) {
      const int b = popcount32(b_mask);
      if (b > max_b) continue;
      double sum_singles = 0.0;
      for (std::uint32_t bits = b_mask; bits != 0; bits &= bits - 1) {
        sum_singles += tab[a_mask | (bits & -bits)] - base;
      }
      const double coeff = static_cast<double>(a + b);
      for (int e = 0; e < n; ++e) {
        if (((a_mask | b_mask) >> e) & 1u) continue;
        ++out.cases_checked;
        const double lhs = tab[a_mask | b_mask | (1u << e)] - tab[a_mask | b_mask];
        const double rhs = coeff / a * (tab[a_mask | (1u << e)] - base) +
                           coeff / (static_cast<double>(a) * (a + 1)) * sum_singles;
        if (lhs > rhs + slack) {
          out.holds = false;
          out.witness = "A=" + Subset::from_mask(n, a_mask).to_string() +
                        " B=" + Subset::from_mask(n, b_mask).to_string() +
                        " e=" + std::to_string(e);
          return out;
        }
      }
    }
  }
  return out;
}

LemmaCheck check_tab_cross(int max_a, int max_b, const Tolerance& tol) {
  LemmaCheck out;
  for (int a = 1; a <= max_a; ++a) {
    for (int b = 1; b <= max_b; ++b) {
      ++out.cases_checked;
      const double t = prop_submod_tab(a, b);
      const double ad = a, bd = b;
      const double closed =
          (-bd + 3.0 * ad * ad * bd + 3.0 * ad * bd * bd + bd * bd * bd) / (3.0 * ad * (1.0 + ad));
      if (!tol.close(bd * t, closed, closed)) {
        out.holds = false;
        out.witness = "b*T(a,b) mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b);
        return out;
      }
      if (!tol.close(bound_prop_submod(a, b) * t, 1.0, 1.0)) {
        out.holds = false;
        out.witness = "bound != 1/T at a=" + std::to_string(a) + " b=" + std::to_string(b);
        return out;
      }
    }
  }
  return out;
}

namespace {

// Diversity value and cross distance computed straight from the matrix.
double diversity_of(const DistanceMatrix& d, std::uint32_t mask) {
  double total = 0.0;
  for (int i = 0; i < d.n; ++i) {
    if (!((mask >> i) & 1u)) continue;
    for (int j = i + 1; j < d.n; ++j) {
      if ((mask >> j) & 1u) total += d(i, j);
    }
  }
  return total;
}

double cross_distance(const DistanceMatrix& d, std::uint32_t a_mask, std::uint32_t b_mask) {
  double total = 0.0;
  for (int i = 0; i < d.n; ++i) {
    if (!((a_mask >> i) & 1u)) continue;
    for (int j = 0; j < d.n; ++j) {
      if ((b_mask >> j) & 1u) total += d(i, j);
    }
  }
  return total;
}

}  // namespace

LemmaCheck check_ravi_interset(const DistanceMatrix& d, const Tolerance& tol) {
  const int n = d.n;
  if (n > 14) throw std::invalid_argument("check_ravi_interset: n must be <= 14");
  LemmaCheck out;
  const std::uint32_t total = 1u << n;
  std::vector<double> f(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) f[mask] = diversity_of(d, mask);
  double max_abs = 0.0;
  for (double v : f) max_abs = std::max(max_abs, std::fabs(v));
  const double slack = tol.slack(static_cast<double>(n) * max_abs);
  for (std::uint32_t a_mask = 1; a_mask < total; ++a_mask) {
    const int a = popcount32(a_mask);
    const std::uint32_t comp = (total - 1) & ~a_mask;
    for (std::uint32_t b_mask = comp; b_mask != 0; b_mask = (b_mask - 1) & comp) {
      const int b = popcount32(b_mask);
      ++out.cases_checked;
      if (a * f[b_mask] > (b - 1) * cross_distance(d, a_mask, b_mask) + slack) {
        out.holds = false;
        out.witness = "A=" + Subset::from_mask(n, a_mask).to_string() +
                      " B=" + Subset::from_mask(n, b_mask).to_string();
        return out;
      }
    }
  }
  return out;
}

LemmaCheck check_metric_decomposition(const DistanceMatrix& d, const Tolerance& tol) {
  const int n = d.n;
  if (n > 14) throw std::invalid_argument("check_metric_decomposition: n must be <= 14");
  LemmaCheck out;
  const std::uint32_t total = 1u << n;
  std::vector<double> f(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) f[mask] = diversity_of(d, mask);
  double max_abs = 0.0;
  for (double v : f) max_abs = std::max(max_abs, std::fabs(v));
  for (std::uint32_t a_mask = 0; a_mask < total; ++a_mask) {
    const std::uint32_t comp = (total - 1) & ~a_mask;
    for (std::uint32_t b_mask = comp;; b_mask = (b_mask - 1) & comp) {
      ++out.cases_checked;
      const double lhs = f[a_mask | b_mask];
      const double rhs = f[a_mask] + f[b_mask] + cross_distance(d, a_mask, b_mask);
      if (!tol.close(lhs, rhs, max_abs)) {
        out.holds = false;
        out.witness = "A=" + Subset::from_mask(n, a_mask).to_string() +
                      " B=" + Subset::from_mask(n, b_mask).to_string();
        return out;
      }
      if (b_mask == 0) break;
    }
  }
  return out;
}

}  // namespace wsub
