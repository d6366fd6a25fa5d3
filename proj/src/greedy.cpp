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

#include "wsub/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "wsub/rng.hpp"

namespace wsub {

namespace {

struct RankedCandidate {
  int id = -1;
  double gain = 0.0;
  double value_with = 0.0;  // f(S + id), reused as f(S_i) for the chosen one
};

// Top-k candidates outside `current` under the deterministic ranking:
// gain descending, originals before dummies, ascending id.
std::vector<RankedCandidate> rank_candidates(const SetFunction& aug, const Subset& current,
                                             int k, double base_value) {
  const int n_orig = aug.n_original();
  std::vector<RankedCandidate> pool;
  pool.reserve(static_cast<std::size_t>(aug.capacity()));
  for (int e = 0; e < aug.capacity(); ++e) {
    if (current.contains(e)) continue;
    RankedCandidate c;
    c.id = e;
    c.value_with = aug.value(current.with(e));
    c.gain = c.value_with - base_value;
    pool.push_back(c);
  }
  const auto better = [n_orig](const RankedCandidate& x, const RankedCandidate& y) {
    if (x.gain != y.gain) return x.gain > y.gain;
    const bool xd = x.id >= n_orig, yd = y.id >= n_orig;
    if (xd != yd) return !xd;  // ties: original ground set wins
    return x.id < y.id;
  };
  if (static_cast<int>(pool.size()) < k) {
    throw std::logic_error("rank_candidates: fewer than k candidates available");
  }
  std::partial_sort(pool.begin(), pool.begin() + k, pool.end(), better);
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

Subset checked_initial(const SetFunction& f, int k, const std::optional<Subset>& initial) {
  Subset init(f.n_original());
  if (initial) {
    if (initial->capacity() != f.n_original()) {
      throw std::invalid_argument("randomized_greedy: initial set capacity must be n_original");
    }
    if (initial->size() >= k) {
      throw std::invalid_argument("randomized_greedy: initial set must have fewer than k elements");
    }
    init = *initial;
  }
  return init;
}

}  // namespace

GreedyTrace randomized_greedy(const SetFunction& f, int k, std::uint64_t seed,
                              const std::optional<Subset>& initial) {
  if (k < 1) throw std::invalid_argument("randomized_greedy: k must be >= 1");
  if (f.ground().n_dummy != 0) {
    throw std::invalid_argument("randomized_greedy: pass the raw oracle, not an augmented one");
  }
  const Subset init = checked_initial(f, k, initial);
  const auto aug = augment_with_dummies(
      std::shared_ptr<const SetFunction>(&f, [](const SetFunction*) {}), k);
  aug->reset_query_count();

  GreedyTrace trace;
  trace.n_original = f.n_original();
  trace.k = k;
  trace.seed = seed;
  trace.initial = init;

  SplitMix64 rng(seed);
  Subset current = init.widened_to(aug->capacity());
  double current_value = aug->value(current);
  const int iterations = k - init.size();
  trace.iterations.reserve(static_cast<std::size_t>(iterations));
  for (int i = 0; i < iterations; ++i) {
    const std::vector<RankedCandidate> top = rank_candidates(*aug, current, k, current_value);
    IterationRecord rec;
    rec.candidates.reserve(top.size());
    rec.marginals.reserve(top.size());
    for (const RankedCandidate& c : top) {
      rec.candidates.push_back(c.id);
      rec.marginals.push_back(c.gain);
    }
    const std::uint32_t pick = rng.below(static_cast<std::uint32_t>(k));
    const RankedCandidate& chosen = top[pick];
    rec.chosen = chosen.id;
    rec.value_after = chosen.value_with;
    current.add(chosen.id);
    current_value = chosen.value_with;
    trace.iterations.push_back(std::move(rec));
  }
  trace.final_set = current.restricted_to(f.n_original());
  trace.final_value = current_value;
  trace.queries = aug->query_count();
  return trace;
}

RunResult deterministic_greedy(const SetFunction& f, int k) {
  if (k < 1) throw std::invalid_argument("deterministic_greedy: k must be >= 1");
  const int n = f.n_original();
  RunResult out;
  out.set = Subset(n);
  f.reset_query_count();
  double current_value = f.value(out.set);
  const int limit = std::min(k, n);
  for (int step = 0; step < limit; ++step) {
    int best = -1;
    double best_gain = 0.0;
    double best_value = 0.0;
    for (int e = 0; e < n; ++e) {
      if (out.set.contains(e)) continue;
      const double value_with = f.value(out.set.with(e));
      const double gain = value_with - current_value;
      if (best == -1 || gain > best_gain) {
        best = e;
        best_gain = gain;
        best_value = value_with;
      }
    }
    if (best == -1 || best_gain < 0.0) break;  // no element left, or all marginals negative
    out.set.add(best);
    current_value = best_value;
  }
  out.value = f.value(out.set);
  out.queries = f.query_count();
  return out;
}

RunResult brute_force_opt(const SetFunction& f, int k) {
  if (k < 1) throw std::invalid_argument("brute_force_opt: k must be >= 1");
  const int n = f.n_original();
  f.reset_query_count();
  RunResult out;
  SubsetEnumerator enumerator(n, std::min(k, n));  // enforces the n <= 24 guard
  bool first = true;
  while (auto s = enumerator.next()) {
    const double v = f.value(*s);
    if (first || v > out.value) {
      out.set = *s;
      out.value = v;
      first = false;
    }
  }
  out.queries = f.query_count();
  return out;
}

ExpectationResult exact_expectation(const SetFunction& f, int k,
                                    const std::optional<Subset>& reference) {
  if (k < 1 || k > 6) throw std::invalid_argument("exact_expectation: k must be in [1, 6]");
  if (f.n_original() > 16) {
    throw std::invalid_argument("exact_expectation: n must be <= 16 (branch tree guard)");
  }
  if (f.ground().n_dummy != 0) {
    throw std::invalid_argument("exact_expectation: pass the raw oracle, not an augmented one");
  }
  const auto aug = augment_with_dummies(
      std::shared_ptr<const SetFunction>(&f, [](const SetFunction*) {}), k);

  ExpectationResult out;
  if (reference) {
    if (reference->capacity() != f.n_original()) {
      throw std::invalid_argument("exact_expectation: reference capacity must be n_original");
    }
    out.has_reference = true;
    out.reference = *reference;
  }
  const Subset ref_aug =
      out.has_reference ? out.reference.widened_to(aug->capacity()) : Subset(aug->capacity());

  // Frontier of merged states; std::map keeps the accumulation order (and
  // therefore the floating-point sums) deterministic.
  std::map<Subset, double> frontier;
  frontier.emplace(Subset(aug->capacity()), 1.0);

  const auto expect_over = [&](const std::map<Subset, double>& states, bool with_ref) {
    double total = 0.0;
    for (const auto& [s, p] : states) {
      total += p * aug->value(with_ref ? (s | ref_aug) : s);
    }
    return total;
  };

  out.expected_value.push_back(expect_over(frontier, false));
  if (out.has_reference) out.expected_union_value.push_back(expect_over(frontier, true));

  out.num_leaves = 1;
  for (int i = 0; i < k; ++i) {
    std::map<Subset, double> next;
    for (const auto& [state, prob] : frontier) {
      const double base = aug->value(state);
      const std::vector<RankedCandidate> top = rank_candidates(*aug, state, k, base);
      const double share = prob / static_cast<double>(k);
      for (const RankedCandidate& c : top) {
        next[state.with(c.id)] += share;
      }
    }
    frontier = std::move(next);
    out.num_leaves *= static_cast<std::uint64_t>(k);
    out.expected_value.push_back(expect_over(frontier, false));
    if (out.has_reference) out.expected_union_value.push_back(expect_over(frontier, true));
  }
  out.exact_expected_value = out.expected_value.back();
  return out;
}

MonteCarloResult monte_carlo_expectation(const SetFunction& f, int k, int trials,
                                         std::uint64_t seed, int threads) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_expectation: trials must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(trials), 0.0);
  const auto run_range = [&](int lo, int hi) {
    for (int t = lo; t < hi; ++t) {
      values[t] = randomized_greedy(f, k, derive_seed(seed, static_cast<std::uint64_t>(t)))
                      .final_value;
    }
  };
  threads = std::clamp(threads, 1, trials);
  if (threads == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (trials + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const int lo = w * chunk;
      const int hi = std::min(trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  MonteCarloResult out;
  out.trials = trials;
  out.min_value = values[0];
  out.max_value = values[0];
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    out.min_value = std::min(out.min_value, v);
    out.max_value = std::max(out.max_value, v);
  }
  out.mean = sum / trials;
  if (trials > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.stderr_of_mean = std::sqrt(ss / (static_cast<double>(trials) - 1.0)) /
                         std::sqrt(static_cast<double>(trials));
  }
  return out;
}

}  // namespace wsub
