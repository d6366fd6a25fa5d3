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

#ifndef WSUB_GREEDY_HPP_
#define WSUB_GREEDY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "wsub/oracle.hpp"
#include "wsub/subset.hpp"

namespace wsub {

// One iteration of the dummy-augmented randomized greedy: the k candidates of
// largest marginal gain in rank order (marginal descending, originals before
// dummies on ties, then ascending id), the uniformly drawn element, and the
// value after adding it.
struct IterationRecord {
  std::vector<int> candidates;   // exactly k ids over the augmented ground set
  std::vector<double> marginals; // aligned with candidates
  int chosen = -1;               // element of candidates
  double value_after = 0.0;      // f(S_i), dummies contribute nothing
};

// Full record of one randomized-greedy run. Deterministic: identical
// (function, k, seed, initial) yields a bit-identical trace.
struct GreedyTrace {
  int n_original = 0;
  int k = 0;
  std::uint64_t seed = 0;
  Subset initial;               // capacity n_original
  std::vector<IterationRecord> iterations;  // k - |initial| records
  Subset final_set;             // capacity n_original, dummies stripped
  double final_value = 0.0;
  long long queries = 0;        // evaluate calls on the augmented oracle
};

struct RunResult {
  Subset set;          // capacity n_original
  double value = 0.0;  // f(set), re-evaluated
  long long queries = 0;
};

// Randomized greedy under a cardinality budget k: augments the ground set
// with 2k dummies, and for k - |initial| iterations draws uniformly from the
// k candidates of largest marginal gain. The candidate pool always holds k
// non-negative marginals thanks to the dummies, so f(S_i) never decreases.
GreedyTrace randomized_greedy(const SetFunction& f, int k, std::uint64_t seed,
                              const std::optional<Subset>& initial = std::nullopt);

// Classical greedy baseline on the original ground set; adds the best
// original element each step (ties toward the lowest id) and stops early
// when the best marginal is negative.
RunResult deterministic_greedy(const SetFunction& f, int k);

// Exact maximizer over all subsets of size <= k, ties resolved to the first
// set in enumeration order (cardinality, then ascending mask). n <= 24.
RunResult brute_force_opt(const SetFunction& f, int k);

// Exact distribution of the randomized greedy, obtained by branching every
// uniform draw with probability 1/k and merging identical solution sets.
// Merging on the set S_i is sound because the next candidate pool depends
// on S_i only.
struct ExpectationResult {
  double exact_expected_value = 0.0;      // E[f(S_k)]
  std::uint64_t num_leaves = 0;           // k^iterations before merging
  std::vector<double> expected_value;     // E[f(S_i)], i = 0..k
  std::vector<double> expected_union_value;  // E[f(S_i u R)], i = 0..k (with reference)
  bool has_reference = false;
  Subset reference;                       // capacity n_original
};

// Guards: k <= 6, n <= 16.
ExpectationResult exact_expectation(const SetFunction& f, int k,
                                    const std::optional<Subset>& reference = std::nullopt);

struct MonteCarloResult {
  double mean = 0.0;
  double stderr_of_mean = 0.0;  // sample stddev / sqrt(trials); 0 for trials = 1
  double min_value = 0.0;
  double max_value = 0.0;
  int trials = 0;
};

// Runs `trials` randomized-greedy runs with per-trial seeds derive_seed(seed,
// trial). Trials are independent, so threads > 1 splits them across a small
// worker pool without changing any result.
MonteCarloResult monte_carlo_expectation(const SetFunction& f, int k, int trials,
                                         std::uint64_t seed, int threads = 1);

}  // namespace wsub

#endif  // WSUB_GREEDY_HPP_
