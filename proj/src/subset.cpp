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

#include "wsub/subset.hpp"

#include <stdexcept>

namespace wsub {

namespace {
constexpr int kEnumerationGuard = 24;
}  // namespace

void GroundSet::validate() const {
  if (n_original < 1) throw std::invalid_argument("GroundSet: n_original must be >= 1");
  if (n_dummy < 0) throw std::invalid_argument("GroundSet: n_dummy must be >= 0");
  if (total() > Subset::kMaxCapacity) {
    throw std::invalid_argument("GroundSet: total size exceeds Subset::kMaxCapacity");
  }
}

Subset::Subset(int capacity) : capacity_(capacity) {
  if (capacity < 0 || capacity > kMaxCapacity) {
    throw std::invalid_argument("Subset: capacity out of range [0, " +
                                std::to_string(kMaxCapacity) + "]");
  }
}

Subset Subset::of(int capacity, std::initializer_list<int> elements) {
  Subset s(capacity);
  for (int e : elements) s.add(e);
  return s;
}

Subset Subset::of(int capacity, const std::vector<int>& elements) {
  Subset s(capacity);
  for (int e : elements) s.add(e);
  return s;
}

Subset Subset::from_mask(int capacity, std::uint64_t mask) {
  if (capacity > 64) throw std::invalid_argument("Subset::from_mask: capacity must be <= 64");
  Subset s(capacity);
  if (capacity < 64 && (mask >> capacity) != 0) {
    throw std::invalid_argument("Subset::from_mask: mask has bits beyond capacity");
  }
  s.words_[0] = mask;
  return s;
}

Subset Subset::full(int capacity) {
  Subset s(capacity);
  for (int w = 0; w * 64 < capacity; ++w) {
    const int bits = std::min(64, capacity - w * 64);
    s.words_[w] = bits == 64 ? ~0ULL : ((1ULL << bits) - 1);
  }
  return s;
}

int Subset::size() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool Subset::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void Subset::check_element(int e) const {
  if (e < 0 || e >= capacity_) {
    throw std::out_of_range("Subset: element " + std::to_string(e) +
                            " outside capacity " + std::to_string(capacity_));
  }
}

void Subset::check_same_capacity(const Subset& o) const {
  if (capacity_ != o.capacity_) {
    throw std::invalid_argument("Subset: capacity mismatch (" + std::to_string(capacity_) +
                                " vs " + std::to_string(o.capacity_) + ")");
  }
}

bool Subset::contains(int e) const {
  check_element(e);
  return (words_[e >> 6] >> (e & 63)) & 1ULL;
}

void Subset::add(int e) {
  check_element(e);
  words_[e >> 6] |= 1ULL << (e & 63);
}

void Subset::remove(int e) {
  check_element(e);
  words_[e >> 6] &= ~(1ULL << (e & 63));
}

Subset Subset::with(int e) const {
  Subset s = *this;
  s.add(e);
  return s;
}

Subset Subset::without(int e) const {
  Subset s = *this;
  s.remove(e);
  return s;
}

Subset Subset::operator|(const Subset& o) const {
  check_same_capacity(o);
  Subset s(capacity_);
  for (int w = 0; w < kWords; ++w) s.words_[w] = words_[w] | o.words_[w];
  return s;
}

Subset Subset::operator&(const Subset& o) const {
  check_same_capacity(o);
  Subset s(capacity_);
  for (int w = 0; w < kWords; ++w) s.words_[w] = words_[w] & o.words_[w];
  return s;
}

Subset Subset::operator-(const Subset& o) const {
  check_same_capacity(o);
  Subset s(capacity_);
  for (int w = 0; w < kWords; ++w) s.words_[w] = words_[w] & ~o.words_[w];
  return s;
}

bool Subset::operator==(const Subset& o) const {
  return capacity_ == o.capacity_ && words_ == o.words_;
}

bool Subset::operator<(const Subset& o) const {
  if (capacity_ != o.capacity_) return capacity_ < o.capacity_;
  for (int w = kWords - 1; w >= 0; --w) {
    if (words_[w] != o.words_[w]) return words_[w] < o.words_[w];
  }
  return false;
}

bool Subset::disjoint_with(const Subset& o) const {
  check_same_capacity(o);
  for (int w = 0; w < kWords; ++w) {
    if ((words_[w] & o.words_[w]) != 0) return false;
  }
  return true;
}

bool Subset::subset_of(const Subset& o) const {
  check_same_capacity(o);
  for (int w = 0; w < kWords; ++w) {
    if ((words_[w] & ~o.words_[w]) != 0) return false;
  }
  return true;
}

Subset Subset::widened_to(int new_capacity) const {
  if (new_capacity < capacity_) {
    throw std::invalid_argument("Subset::widened_to: new capacity smaller than current");
  }
  Subset s(new_capacity);
  s.words_ = words_;
  return s;
}

Subset Subset::restricted_to(int new_capacity) const {
  if (new_capacity > capacity_) {
    throw std::invalid_argument("Subset::restricted_to: new capacity larger than current");
  }
  Subset s(new_capacity);
  for (int w = 0; w * 64 < new_capacity; ++w) {
    const int bits = std::min(64, new_capacity - w * 64);
    const std::uint64_t keep = bits == 64 ? ~0ULL : ((1ULL << bits) - 1);
    s.words_[w] = words_[w] & keep;
  }
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int w = 0; w < kWords; ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t Subset::low_mask() const { return words_[0]; }

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

SubsetEnumerator::SubsetEnumerator(int n, int max_size)
    : n_(n), max_size_(max_size), card_(0), mask_(0) {
  if (n < 0 || n > kEnumerationGuard) {
    throw std::invalid_argument(
        "SubsetEnumerator: n = " + std::to_string(n) + " exceeds the exhaustive guard (n <= " +
        std::to_string(kEnumerationGuard) + "); use a sampled scan for larger ground sets");
  }
  if (max_size < 0 || max_size > n) {
    throw std::invalid_argument("SubsetEnumerator: max_size must be in [0, n]");
  }
}

std::optional<std::uint32_t> SubsetEnumerator::next_mask() {
  if (done_) return std::nullopt;
  const std::uint32_t out = mask_;

  // Gosper's hack: next mask with card_ bits, ascending numeric order.
  if (card_ == 0) {
    card_ = 1;
    mask_ = card_ <= max_size_ ? 1u : 0u;
    if (card_ > max_size_) done_ = true;
    return out;
  }
  const std::uint32_t c = mask_ & static_cast<std::uint32_t>(-static_cast<std::int32_t>(mask_));
  const std::uint32_t r = mask_ + c;
  std::uint32_t next = (((r ^ mask_) >> 2) / c) | r;
  if (next < (1u << n_)) {
    mask_ = next;
    return out;
  }
  ++card_;
  if (card_ > max_size_) {
    done_ = true;
  } else {
    mask_ = (1u << card_) - 1;
  }
  return out;
}

std::optional<Subset> SubsetEnumerator::next() {
  auto m = next_mask();
  if (!m) return std::nullopt;
  return Subset::from_mask(n_, *m);
}

std::uint64_t count_subsets(int n, int max_size) {
  if (n < 0 || max_size < 0 || max_size > n) {
    throw std::invalid_argument("count_subsets: max_size must be in [0, n]");
  }
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (int i = 0; i <= max_size; ++i) {
    total += binom;
    binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return total;
}

}  // namespace wsub
