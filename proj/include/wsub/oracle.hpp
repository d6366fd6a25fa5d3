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

#ifndef WSUB_ORACLE_HPP_
#define WSUB_ORACLE_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wsub/subset.hpp"

namespace wsub {

// Evaluatable set function f : 2^{ground set} -> R with a query counter.
// Oracles are immutable after construction and safe for concurrent reads;
// the counter is the only mutable state and is updated atomically.
//
// Contract: value(empty) == 0 exactly (enforced at construction by
// build_oracle), and evaluation is deterministic bit-for-bit.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  // Evaluates f(s). s.capacity() must equal ground().total().
  double value(const Subset& s) const;

  const GroundSet& ground() const { return ground_; }
  int n_original() const { return ground_.n_original; }
  int capacity() const { return ground_.total(); }
  const std::string& label() const { return label_; }

  // Evaluate calls since the last reset. Monotone non-decreasing between
  // resets; one count per value() call on this oracle.
  long long query_count() const { return queries_.load(std::memory_order_relaxed); }
  void reset_query_count() const { queries_.store(0, std::memory_order_relaxed); }

 protected:
  SetFunction(GroundSet ground, std::string label);

 private:
  virtual double eval(const Subset& s) const = 0;

  GroundSet ground_;
  std::string label_;
  mutable std::atomic<long long> queries_{0};
};

using OraclePtr = std::shared_ptr<const SetFunction>;

// Marginal gain f_A(B) = f(A u B) - f(A). Exactly two evaluate calls;
// B empty short-circuits to 0 with no evaluation. A and B must be disjoint.
double marginal(const SetFunction& f, const Subset& a, const Subset& b);

// Ground set extended with 2k dummy elements whose marginal gain is zero
// against any base: evaluate(S) = inner(S intersect originals). Original
// element ids are preserved; dummies occupy ids n..n+2k-1.
class DummyAugmentedOracle : public SetFunction {
 public:
  DummyAugmentedOracle(OraclePtr inner, int k);

  const OraclePtr& inner() const { return inner_; }
  int k() const { return k_; }

 private:
  double eval(const Subset& s) const override;

  OraclePtr inner_;
  int k_;
};

// Throws when k < 1.
std::shared_ptr<const DummyAugmentedOracle> augment_with_dummies(OraclePtr f, int k);

// Dense cache of all 2^n values of an oracle, indexed by bitmask. Used by the
// exhaustive scans so the hot loops run on array lookups instead of virtual
// dispatch. Guarded at n <= 22.
class ValueTable {
 public:
  explicit ValueTable(const SetFunction& f);

  double operator[](std::uint32_t mask) const { return values_[mask]; }
  int n() const { return n_; }
  double max_abs() const { return max_abs_; }
  const std::vector<double>& values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;
  double max_abs_ = 0.0;
};

}  // namespace wsub

#endif  // WSUB_ORACLE_HPP_
