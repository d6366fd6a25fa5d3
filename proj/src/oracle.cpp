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

#include "wsub/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace wsub {

SetFunction::SetFunction(GroundSet ground, std::string label)
    : ground_(ground), label_(std::move(label)) {
  ground_.validate();
}

double SetFunction::value(const Subset& s) const {
  if (s.capacity() != ground_.total()) {
    throw std::invalid_argument("SetFunction::value: subset capacity " +
                                std::to_string(s.capacity()) + " does not match ground set size " +
                                std::to_string(ground_.total()) + " of '" + label_ + "'");
  }
  queries_.fetch_add(1, std::memory_order_relaxed);
  return eval(s);
}

double marginal(const SetFunction& f, const Subset& a, const Subset& b) {
  if (!a.disjoint_with(b)) {
    throw std::invalid_argument("marginal: A and B must be disjoint");
  }
  if (b.empty()) return 0.0;
  return f.value(a | b) - f.value(a);
}

DummyAugmentedOracle::DummyAugmentedOracle(OraclePtr inner, int k)
    : SetFunction(GroundSet{inner ? inner->n_original() : 0, 2 * k},
                  inner ? inner->label() + "+dummies" : ""),
      inner_(std::move(inner)),
      k_(k) {
  if (!inner_) throw std::invalid_argument("DummyAugmentedOracle: null inner oracle");
  if (inner_->ground().n_dummy != 0) {
    throw std::invalid_argument("DummyAugmentedOracle: inner oracle is already augmented");
  }
}

double DummyAugmentedOracle::eval(const Subset& s) const {
  return inner_->value(s.restricted_to(inner_->n_original()));
}

std::shared_ptr<const DummyAugmentedOracle> augment_with_dummies(OraclePtr f, int k) {
  if (k < 1) throw std::invalid_argument("augment_with_dummies: budget k must be >= 1");
  return std::make_shared<const DummyAugmentedOracle>(std::move(f), k);
}

ValueTable::ValueTable(const SetFunction& f) : n_(f.capacity()) {
  if (n_ > 22) {
    throw std::invalid_argument("ValueTable: ground set size " + std::to_string(n_) +
                                " exceeds the dense-cache guard (n <= 22)");
  }
  const std::uint32_t total = 1u << n_;
  values_.resize(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const double v = f.value(Subset::from_mask(n_, mask));
    values_[mask] = v;
    if (std::fabs(v) > max_abs_) max_abs_ = std::fabs(v);
  }
}

}  // namespace wsub
