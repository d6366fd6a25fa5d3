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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "wsub/ratio.hpp"
#include "wsub/rng.hpp"
#include "wsub/zoo.hpp"

using namespace wsub;

namespace {

FunctionSpec line013() {
  return FunctionSpec::metric_diversity({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
}

OraclePtr unit_cut2() { return build_oracle(FunctionSpec::graph_cut({{0, 1}, {1, 0}})); }

}  // namespace

TEST_CASE("local ratio on the diversity line") {
  const OraclePtr f = build_oracle(line013());
  f->reset_query_count();
  const PairRatio r = local_ratio(*f, Subset::of(3, {0}), Subset::of(3, {1, 2}));
  CHECK(f->query_count() == 4);  // |B| + 2 with a shared base
  CHECK(r.joint_marginal == 6.0);
  CHECK(r.sum_marginals == 4.0);  // d(0,1) + d(0,3) = 1 + 3
  CHECK(r.sign == SignClass::kPositive);
  CHECK(r.ratio() == doctest::Approx(2.0 / 3.0));
  CHECK(r.ratio() >= bound_metric(1, 2));  // 1/2

  CHECK_THROWS_AS(local_ratio(*f, Subset::of(3, {0}), Subset::of(3, {0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(local_ratio(*f, Subset::of(3, {0}), Subset(3)), std::invalid_argument);
}

TEST_CASE("local ratio classifies signs") {
  const OraclePtr cut = unit_cut2();
  const PairRatio neg = local_ratio(*cut, Subset::of(2, {0}), Subset::of(2, {1}));
  CHECK(neg.sum_marginals == -1.0);
  CHECK(neg.joint_marginal == -1.0);
  CHECK(neg.sign == SignClass::kNegative);

  const OraclePtr mod = build_oracle(FunctionSpec::modular({3, 1, 2}));
  const PairRatio pos = local_ratio(*mod, Subset::of(3, {0}), Subset::of(3, {1, 2}));
  CHECK(pos.sum_marginals == pos.joint_marginal);  // modular additivity

  const PairRatio zero = local_ratio(*cut, Subset(2), Subset::of(2, {0, 1}));
  CHECK(zero.sign == SignClass::kZero);
  CHECK(zero.sum_marginals == 2.0);
}

TEST_CASE("fit_weak_gamma on canonical instances") {
  const RatioReport coverage = fit_weak_gamma(*build_oracle(make_coverage_spec(6, 12, 3)), 6);
  REQUIRE(coverage.fitted_weak_gamma.has_value());
  CHECK(*coverage.fitted_weak_gamma == 1.0);  // submodular: clipped at 1

  const RatioReport cut = fit_weak_gamma(*unit_cut2(), 2);
  REQUIRE(cut.fitted_weak_gamma.has_value());
  CHECK(*cut.fitted_weak_gamma == 1.0);
  CHECK(cut.n_negative == 2);  // ({0},{1}) and ({1},{0})

  // Metric diversity pins gamma to 0 through the pair (empty, {u,v}).
  const RatioReport div = fit_weak_gamma(*build_oracle(line013()), 3);
  REQUIRE(div.fitted_weak_gamma.has_value());
  CHECK(*div.fitted_weak_gamma == 0.0);
}

TEST_CASE("fit_weak_gamma detects an unsatisfiable plant") {
  // f_A(B) > 0 > sum of singleton marginals at A = {0}, B = {1,2}.
  std::vector<double> vals(8, 0.0);
  vals[0b001] = 1.0;   // {0}
  vals[0b011] = 0.5;   // {0,1}
  vals[0b101] = 0.5;   // {0,2}
  vals[0b111] = 2.0;   // {0,1,2}
  vals[0b010] = 0.1;
  vals[0b100] = 0.1;
  vals[0b110] = 0.2;
  const RatioReport r = fit_weak_gamma(*build_oracle(FunctionSpec::table(3, vals)), 3);
  CHECK(r.infeasible);
  CHECK_FALSE(r.fitted_weak_gamma.has_value());
  REQUIRE(r.infeasible_witness.has_value());
  CHECK(r.infeasible_witness->a.to_string() == "{0}");
  CHECK(r.infeasible_witness->b.to_string() == "{1,2}");
  CHECK(r.infeasible_witness->sum_marginals < 0.0);
  CHECK(r.infeasible_witness->joint_marginal > 0.0);
}

TEST_CASE("fit_pseudo_gamma intervals") {
  const RatioReport mod = fit_pseudo_gamma(*build_oracle(FunctionSpec::modular({1, 2, 3})), 3);
  REQUIRE(mod.fitted_pseudo_gamma.has_value());
  CHECK(*mod.fitted_pseudo_gamma == 1.0);
  CHECK(mod.pseudo_lower_bound == 0.0);

  // The negative pair of the cut forces gamma >= 1, so only gamma = 1 fits.
  const RatioReport cut = fit_pseudo_gamma(*unit_cut2(), 2);
  REQUIRE(cut.fitted_pseudo_gamma.has_value());
  CHECK(*cut.fitted_pseudo_gamma == 1.0);
  CHECK(cut.pseudo_lower_bound == 1.0);
}

TEST_CASE("weak and pseudo fits agree on monotone instances") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const FunctionSpec spec = seed % 2 == 0 ? make_coverage_spec(6, 12, seed)
                                            : make_square_metric_spec(6, seed);
    const OraclePtr f = build_oracle(spec);
    const RatioReport weak = fit_weak_gamma(*f, 6);
    const RatioReport pseudo = fit_pseudo_gamma(*f, 6);
    REQUIRE(weak.fitted_weak_gamma.has_value());
    REQUIRE(pseudo.fitted_pseudo_gamma.has_value());
    CHECK(*weak.fitted_weak_gamma == doctest::Approx(*pseudo.fitted_pseudo_gamma).epsilon(1e-12));
    CHECK(weak.n_negative == 0);
  }
}

TEST_CASE("gamma_profile") {
  const GammaProfileReport coverage =
      gamma_profile(*build_oracle(make_coverage_spec(7, 14, 9)), 7, 3);
  for (double g : coverage.gamma) CHECK(g == 1.0);

  const int k = 3;
  const GammaProfileReport div = gamma_profile(*build_oracle(make_line_metric_spec(6, 10)), 6, k);
  for (int i = 0; i < k; ++i) {
    CHECK(div.gamma[i] >= metric_gamma_lower(i, k) - 1e-9);
  }
  CHECK(div.gamma[0] == 0.0);  // empty base, joint positive, sum zero

  // Proportionally submodular instance: profile dominates the analytic curve.
  const OraclePtr prop = build_oracle(
      FunctionSpec::sum({make_coverage_spec(6, 12, 11), make_square_metric_spec(6, 12)}));
  REQUIRE(check_proportionally_submodular(*prop).holds);
  const GammaProfileReport pr = gamma_profile(*prop, 6, k);
  for (int i = 0; i < k; ++i) {
    CHECK(pr.gamma[i] >= prop_submod_gamma_lower(i, k) - 1e-9);
  }

  // Vacuous level: n = 1 ground set has no pair with |A| = 1 left.
  const GammaProfileReport tiny = gamma_profile(*build_oracle(FunctionSpec::modular({2})), 1, 1);
  CHECK_FALSE(tiny.vacuous[0]);

  const GammaProfileReport cutp = gamma_profile(*unit_cut2(), 2, 2);
  CHECK(cutp.n_negative > 0);
  CHECK(cutp.negatives_min_form_ok);  // cuts are submodular: sum >= joint
}

TEST_CASE("analytic bound formulas") {
  CHECK(bound_metric(2, 3) == doctest::Approx(0.5));
  CHECK(bound_metric(5, 1) == 1.0);
  CHECK(bound_metric(0, 4) == 0.0);
  CHECK_THROWS_AS(bound_metric(2, 0), std::invalid_argument);

  CHECK(bound_prop_submod(1, 2) == doctest::Approx(0.5));  // 6/12
  CHECK(bound_prop_submod(4, 1) == 1.0);
  CHECK(bound_prop_submod(0, 2) == 0.0);
  CHECK_THROWS_AS(bound_prop_submod(1, 0), std::invalid_argument);

  CHECK(bound_card_scaled(0, 1) == 1.0);
  CHECK(bound_card_scaled(1, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(bound_card_scaled(3, 1) == 1.0);
  CHECK_THROWS_AS(bound_card_scaled(1, 0), std::invalid_argument);

  CHECK(bound_card_divided(1, 1) == 1.0);
  CHECK(bound_card_divided(1, 2) == doctest::Approx(1.5));
  CHECK(bound_card_divided(2, 2) == doctest::Approx(4.0 / 3.0));
  CHECK_THROWS_AS(bound_card_divided(0, 2), std::invalid_argument);

  CHECK(bound_product(1.0, 1.0, 0.5) == doctest::Approx(0.5));
  CHECK(bound_product(1.0, 2.0, 1.0) == doctest::Approx(0.5));
  // Warm-start ratio value: alpha = 1 - e^{-1/2} gives ratio ~0.2824.
  const double alpha = 1.0 - std::exp(-0.5);
  CHECK(bound_product(alpha, 1.0 + alpha, 1.0) == doctest::Approx(0.2824).epsilon(1e-3));
  CHECK_THROWS_AS(bound_product(2.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bound_product(1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("T_{a,b} cross-check") {
  const LemmaCheck tab = check_tab_cross(12, 12);
  CHECK(tab.holds);
  CHECK(tab.cases_checked == 144);
  // Spot value: T(1,2) = (3 + 6 + 4 - 1) / 6 = 2, bound = 1/2.
  CHECK(prop_submod_tab(1, 2) == doctest::Approx(2.0));
}

TEST_CASE("base-decrement and base-shrink hold on proportionally submodular instances") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const OraclePtr f = build_oracle(FunctionSpec::sum(
        {make_coverage_spec(6, 12, seed), make_line_metric_spec(6, 100 + seed)}));
    REQUIRE(check_proportionally_submodular(*f).holds);
    CHECK(check_base_decrement(*f).holds);
    CHECK(check_base_shrink(*f, 4).holds);
  }
}

TEST_CASE("verify_example_bounds passes on every family") {
  for (BoundFamily family : all_bound_families()) {
    const VerifyReport report = verify_example_bounds(family, 3, 6, 3, 777);
    CHECK_MESSAGE(report.passed, "family ", to_name(family));
    CHECK(report.pairs_checked > 0);
  }
}

TEST_CASE("verify_bounds_on_oracle flags a planted violation") {
  std::vector<double> vals(8, 0.0);
  vals[7] = 1.0;  // proportional submodularity fails, and so does the bound
  const OraclePtr f = build_oracle(FunctionSpec::table(3, vals));
  const VerifyReport report = verify_bounds_on_oracle(*f, BoundFamily::kPropSubmod, 3);
  CHECK_FALSE(report.passed);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].a.to_string() == "{0}");
  CHECK(report.violations[0].b.to_string() == "{1,2}");
}

TEST_CASE("fitted gammas match a grid-scan reimplementation on random tables") {
  // Independent oracle: direct scan of the defining inequality over a gamma
  // grid with step 1e-4, entirely separate from the fitting code path.
  const auto grid_fit = [](const ValueTable& tab, bool weak) -> std::optional<double> {
    const int n = tab.n();
    std::optional<double> best;
    for (int step = 10000; step >= 1; --step) {
      const double gamma = step * 1e-4;
      bool ok = true;
      for (std::uint32_t a = 0; a < (1u << n) && ok; ++a) {
        const std::uint32_t comp = ((1u << n) - 1) & ~a;
        for (std::uint32_t b = comp; b != 0; b = (b - 1) & comp) {
          double sum = 0.0;
          for (std::uint32_t bits = b; bits; bits &= bits - 1) {
            sum += tab[a | (bits & -bits)] - tab[a];
          }
          const double joint = tab[a | b] - tab[a];
          const double rhs = weak ? std::min(gamma * joint, joint / gamma) : gamma * joint;
          if (sum < rhs - 1e-9) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        best = gamma;
        break;
      }
    }
    return best;
  };

  SplitMix64 rng(2026);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(2));
    std::vector<double> vals(std::size_t{1} << n, 0.0);
    for (std::size_t i = 1; i < vals.size(); ++i) vals[i] = rng.next_double();
    const OraclePtr f = build_oracle(FunctionSpec::table(n, vals));
    const ValueTable tab(*f);

    const RatioReport weak = fit_weak_gamma(*f, n);
    const auto weak_grid = grid_fit(tab, true);
    if (weak.fitted_weak_gamma && *weak.fitted_weak_gamma > 1e-4) {
      REQUIRE(weak_grid.has_value());
      CHECK(std::fabs(*weak.fitted_weak_gamma - *weak_grid) <= 2e-4);
    }

    const RatioReport pseudo = fit_pseudo_gamma(*f, n);
    const auto pseudo_grid = grid_fit(tab, false);
    if (pseudo.fitted_pseudo_gamma && !pseudo_grid.has_value()) {
      // Grid found nothing: the feasible interval must be narrower than one
      // grid step or pinned below 1e-4.
      CHECK(*pseudo.fitted_pseudo_gamma - pseudo.pseudo_lower_bound <= 2e-4);
    } else if (pseudo.fitted_pseudo_gamma && pseudo_grid.has_value()) {
      CHECK(*pseudo_grid <= *pseudo.fitted_pseudo_gamma + 1e-9);
      CHECK(std::fabs(*pseudo.fitted_pseudo_gamma - *pseudo_grid) <= 2e-4);
    }
  }
}

TEST_CASE("submodular oracles never dip below ratio one on positive pairs") {
  for (std::uint64_t seed = 21; seed <= 24; ++seed) {
    const OraclePtr f = build_oracle(make_cut_spec(6, seed));
    const RatioReport r = fit_weak_gamma(*f, 6);
    CHECK(r.raw_weak_min >= 1.0 - 1e-9);
    for (const AbMinimum& cell : r.minima) CHECK(cell.min_ratio >= 1.0 - 1e-9);
  }
}

TEST_CASE("sampled fit mode is labeled and deterministic") {
  const OraclePtr f = build_oracle(make_coverage_spec(20, 30, 5));
  FitOptions opts;
  opts.exhaustive_limit = 10;
  opts.sample_pairs = 500;
  opts.seed = 42;
  const RatioReport a = fit_weak_gamma(*f, 20, opts);
  const RatioReport b = fit_weak_gamma(*f, 20, opts);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.pairs_scanned > 0);
  CHECK(a.pairs_scanned == b.pairs_scanned);
  REQUIRE(a.fitted_weak_gamma.has_value());
  CHECK(*a.fitted_weak_gamma == *b.fitted_weak_gamma);
  CHECK(*a.fitted_weak_gamma == 1.0);  // coverage is submodular
}

TEST_CASE("non-monotone families do exercise the negative-class branch") {
  const OraclePtr f = build_oracle(FunctionSpec::card_divided(make_cut_spec(7, 5)));
  const RatioReport r = fit_weak_gamma(*f, 7);
  CHECK(r.n_negative > 0);
  const OraclePtr g = build_oracle(FunctionSpec::sum(
      {make_coverage_spec(7, 14, 6), FunctionSpec::card_scaled(make_cut_spec(7, 7))}));
  CHECK(fit_weak_gamma(*g, 7).n_negative > 0);
}
