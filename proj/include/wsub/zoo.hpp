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

#ifndef WSUB_ZOO_HPP_
#define WSUB_ZOO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsub/oracle.hpp"
#include "wsub/subset.hpp"
#include "wsub/tolerance.hpp"

namespace wsub {

// Symmetric non-negative distance matrix with zero diagonal satisfying the
// triangle inequality (within rel tolerance scaled by the largest entry).
struct DistanceMatrix {
  int n = 0;
  std::vector<double> d;  // row-major n*n

  double operator()(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
  double& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }

  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);
  // Throws naming the offending pair/triple on violation.
  void validate(const Tolerance& tol = {}) const;
};

// Weighted coverage instance: element i covers item subset covers[i].
struct CoverageInstance {
  int n = 0;          // element count
  int num_items = 0;  // universe item count
  std::vector<double> item_weights;
  std::vector<std::vector<int>> covers;

  void validate() const;
};

// Declarative description of a set function; build_oracle turns it into an
// evaluatable oracle after validation.
struct FunctionSpec {
  enum class Kind {
    kModular,
    kCoverage,
    kMetricDiversity,
    kGraphCut,
    kSum,
    kProduct,
    kCardScaled,
    kCardDivided,
    kTable,
  };

  Kind kind = Kind::kModular;
  std::vector<double> weights;                // modular
  CoverageInstance coverage;                  // coverage
  std::vector<std::vector<double>> matrix;    // metric_diversity / graph_cut
  std::vector<FunctionSpec> children;         // sum (>=1) / product (2) / card_* (1)
  int table_n = 0;                            // table
  std::vector<double> table_values;           // 2^table_n values, values[0] == 0

  // Shared element count of every leaf; throws on mismatch.
  int n_original() const;

  static FunctionSpec modular(std::vector<double> weights);
  static FunctionSpec coverage_fn(CoverageInstance instance);
  static FunctionSpec metric_diversity(std::vector<std::vector<double>> distances);
  static FunctionSpec graph_cut(std::vector<std::vector<double>> weights);
  static FunctionSpec sum(std::vector<FunctionSpec> terms);
  static FunctionSpec product(FunctionSpec a, FunctionSpec b);
  static FunctionSpec card_scaled(FunctionSpec inner);
  static FunctionSpec card_divided(FunctionSpec inner);
  static FunctionSpec table(int n, std::vector<double> values);
};

// Validates the spec (matrix symmetry, triangle inequality, shared n, table
// shape) and returns the oracle. The returned oracle satisfies
// value(empty) == 0 exactly; a table spec violating that is rejected.
OraclePtr build_oracle(const FunctionSpec& spec, const Tolerance& tol = {});

// Result of a property scan. On failure the witness fields identify the
// violating configuration (meaning depends on the check).
struct PropertyCheck {
  bool holds = true;
  bool exhaustive = true;
  long long cases_checked = 0;
  Subset witness_a;      // monotone: S | submodular: A | proportional: S
  Subset witness_b;      // submodular: B = A + e' | proportional: T
  int witness_element = -1;  // monotone / submodular: e
  std::string detail;
};

struct CheckOptions {
  int exhaustive_limit = 20;       // monotone / submodular scans
  int pair_exhaustive_limit = 12;  // proportional scan enumerates 4^n ordered pairs
  long long samples = 200000;      // sampled mode beyond the guards
  std::uint64_t seed = 0;
  Tolerance tol;
};

// f(S) >= -tol for every enumerated (or sampled) S. Non-negativity is a
// declared property of the oracles, not something the type assumes.
PropertyCheck check_nonnegative(const SetFunction& f, const CheckOptions& opts = {});
// f_S(e) >= -tol for every S, e not in S.
PropertyCheck check_monotone(const SetFunction& f, const CheckOptions& opts = {});
// Diminishing returns via the pairwise form f_{S+e'}(e) <= f_S(e) + tol.
PropertyCheck check_submodular(const SetFunction& f, const CheckOptions& opts = {});
// |S| f(T) + |T| f(S) >= |S n T| f(S u T) + |S u T| f(S n T) for all ordered
// pairs (S, T), not necessarily disjoint.
PropertyCheck check_proportionally_submodular(const SetFunction& f,
                                              const CheckOptions& opts = {});

// Seeded random instance generators. Deterministic: same arguments, same
// spec. Seeds are mixed through SplitMix64.
FunctionSpec make_line_metric_spec(int n, std::uint64_t seed);
FunctionSpec make_square_metric_spec(int n, std::uint64_t seed);
FunctionSpec make_coverage_spec(int n, int num_items, std::uint64_t seed);
FunctionSpec make_cut_spec(int n, std::uint64_t seed);
FunctionSpec make_modular_spec(int n, std::uint64_t seed);
// Table-backed f(S) = g(|S|) with g concave, non-negative, g(0) = 0 and a
// decreasing tail, so the function is submodular and non-monotone.
FunctionSpec make_concave_cardinality_spec(int n, std::uint64_t seed);
// Non-monotone proportionally submodular instance: a concave-cardinality
// core plus a small metric-diversity term, regenerated (seed advanced) until
// the exhaustive pair scan certifies proportional submodularity and a
// monotonicity violation exists. n <= 10.
FunctionSpec make_nonmonotone_prop_submod_spec(int n, std::uint64_t seed);

}  // namespace wsub

#endif  // WSUB_ZOO_HPP_
