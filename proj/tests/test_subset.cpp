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

#include <bitset>
#include <set>
#include <stdexcept>

#include "wsub/rng.hpp"
#include "wsub/subset.hpp"

using namespace wsub;

TEST_CASE("ground set layout: originals first, dummies appended") {
  GroundSet g{3, 4};
  g.validate();
  CHECK(g.total() == 7);
  CHECK_FALSE(g.is_dummy(2));
  CHECK(g.is_dummy(3));
  CHECK(g.is_dummy(6));
  const GroundSet empty{0, 0};
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("subset basics") {
  Subset s = Subset::of(10, {0, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.to_string() == "{0,2,5}");
  CHECK_THROWS_AS(s.contains(10), std::out_of_range);
  CHECK_THROWS_AS(Subset::of(3, {3}), std::out_of_range);

  Subset t = Subset::of(10, {2, 3});
  CHECK((s | t).elements() == std::vector<int>{0, 2, 3, 5});
  CHECK((s & t).elements() == std::vector<int>{2});
  CHECK((s - t).elements() == std::vector<int>{0, 5});
  CHECK_FALSE(s.disjoint_with(t));
  CHECK(s.disjoint_with(Subset::of(10, {1, 4})));
  CHECK((s & t).subset_of(s));

  Subset other_cap = Subset::of(4, {1});
  CHECK_THROWS_AS((void)(s | other_cap), std::invalid_argument);
}

TEST_CASE("widen and restrict move between ground sets") {
  Subset s = Subset::of(3, {0, 2});
  Subset w = s.widened_to(7);
  CHECK(w.capacity() == 7);
  CHECK(w.elements() == std::vector<int>{0, 2});
  w.add(5);  // a dummy
  CHECK(w.restricted_to(3).elements() == std::vector<int>{0, 2});
  CHECK_THROWS_AS(s.widened_to(2), std::invalid_argument);
}

TEST_CASE("subset algebra agrees with std::bitset on random masks") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(120));
    std::bitset<128> ba, bb;
    Subset sa(n), sb(n);
    for (int e = 0; e < n; ++e) {
      if (rng.next_u64() & 1u) {
        ba.set(e);
        sa.add(e);
      }
      if (rng.next_u64() & 1u) {
        bb.set(e);
        sb.add(e);
      }
    }
    CHECK((sa | sb).size() == static_cast<int>((ba | bb).count()));
    CHECK((sa & sb).size() == static_cast<int>((ba & bb).count()));
    CHECK((sa - sb).size() == static_cast<int>((ba & ~bb).count()));
    CHECK(sa.disjoint_with(sb) == ((ba & bb).none()));
  }
}

TEST_CASE("enumeration order: cardinality, then ascending mask") {
  SubsetEnumerator e(3, 1);
  std::vector<std::string> seen;
  while (auto s = e.next()) seen.push_back(s->to_string());
  CHECK(seen == std::vector<std::string>{"{}", "{0}", "{1}", "{2}"});
}

TEST_CASE("enumeration counts") {
  SubsetEnumerator all(3, 3);
  int count = 0;
  while (all.next_mask()) ++count;
  CHECK(count == 8);

  SubsetEnumerator partial(4, 2);
  count = 0;
  std::set<std::uint32_t> unique;
  int last_card = 0;
  while (auto m = partial.next_mask()) {
    ++count;
    unique.insert(*m);
    const int card = __builtin_popcount(*m);
    CHECK(card >= last_card);  // cardinality never decreases
    last_card = card;
    CHECK(card <= 2);
  }
  CHECK(count == 11);  // 1 + 4 + 6
  CHECK(unique.size() == 11);

  CHECK(count_subsets(4, 2) == 11);
  CHECK(count_subsets(3, 3) == 8);
}

TEST_CASE("enumeration guard suggests sampled mode") {
  CHECK_THROWS_WITH_AS(SubsetEnumerator(25, 3), doctest::Contains("sampled"),
                       std::invalid_argument);
  // n = 24 is the last admissible size.
  SubsetEnumerator ok(24, 0);
  CHECK(ok.next_mask().has_value());
  CHECK_FALSE(ok.next_mask().has_value());
}

TEST_CASE("enumerator emits every subset exactly once for n = 5") {
  SubsetEnumerator e(5, 5);
  std::set<std::uint32_t> seen;
  while (auto m = e.next_mask()) seen.insert(*m);
  CHECK(seen.size() == 32);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 31);
}
