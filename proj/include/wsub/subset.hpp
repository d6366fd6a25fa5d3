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

#ifndef WSUB_SUBSET_HPP_
#define WSUB_SUBSET_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace wsub {

// Ground set of a set function: n_original real elements with ids
// 0..n_original-1, followed by n_dummy dummy elements with ids
// n_original..n_original+n_dummy-1. Dummies only appear after augmentation.
struct GroundSet {
  int n_original = 0;
  int n_dummy = 0;

  int total() const { return n_original + n_dummy; }
  bool is_dummy(int e) const { return e >= n_original; }
  void validate() const;
};

// Fixed-capacity bit-indexed set over {0, ..., capacity-1}. Value type with
// inline storage; capacity is bounded by kMaxCapacity. All binary operations
// require both operands to share the same capacity.
class Subset {
 public:
  static constexpr int kMaxCapacity = 256;
  static constexpr int kWords = kMaxCapacity / 64;

  Subset() = default;  // capacity 0, unusable until assigned
  explicit Subset(int capacity);

  static Subset of(int capacity, std::initializer_list<int> elements);
  static Subset of(int capacity, const std::vector<int>& elements);
  // Low 'capacity' bits of mask; capacity <= 64.
  static Subset from_mask(int capacity, std::uint64_t mask);
  static Subset full(int capacity);

  int capacity() const { return capacity_; }
  int size() const;
  bool empty() const;

  bool contains(int e) const;
  void add(int e);
  void remove(int e);
  Subset with(int e) const;
  Subset without(int e) const;

  Subset operator|(const Subset& o) const;  // union
  Subset operator&(const Subset& o) const;  // intersection
  Subset operator-(const Subset& o) const;  // difference
  bool operator==(const Subset& o) const;
  bool operator!=(const Subset& o) const { return !(*this == o); }
  // Total order: capacity, then words low-to-high. Used for deterministic
  // merges in the exact-expectation engine.
  bool operator<(const Subset& o) const;

  bool disjoint_with(const Subset& o) const;
  bool subset_of(const Subset& o) const;

  // Same elements, larger universe (dummy-augmentation embedding).
  Subset widened_to(int new_capacity) const;
  // Keep only elements < new_capacity and shrink the universe (strips
  // dummies when new_capacity = n_original).
  Subset restricted_to(int new_capacity) const;

  std::vector<int> elements() const;
  // First 64 bits; valid only for capacity <= 64 (table indexing).
  std::uint64_t low_mask() const;
  std::string to_string() const;  // "{0,2,5}"

 private:
  void check_element(int e) const;
  void check_same_capacity(const Subset& o) const;

  int capacity_ = 0;
  std::array<std::uint64_t, kWords> words_{};
};

// Streams every subset of {0..n-1} with cardinality <= max_size exactly once,
// ordered by cardinality and then by ascending bitmask value. Single-consumer.
class SubsetEnumerator {
 public:
  // Throws when n exceeds the exhaustive guard (24); callers beyond that
  // are expected to use sampled scans instead.
  SubsetEnumerator(int n, int max_size);

  std::optional<std::uint32_t> next_mask();
  std::optional<Subset> next();

  int n() const { return n_; }

 private:
  int n_;
  int max_size_;
  int card_;               // cardinality currently being emitted
  std::uint32_t mask_;     // next mask to emit, ~0 when card_ exhausted
  bool done_ = false;
};

// Number of subsets the enumerator yields: sum_{i<=max_size} C(n, i).
std::uint64_t count_subsets(int n, int max_size);

}  // namespace wsub

#endif  // WSUB_SUBSET_HPP_
