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

#ifndef WSUB_TOLERANCE_HPP_
#define WSUB_TOLERANCE_HPP_

#include <algorithm>
#include <cmath>

namespace wsub {

// Numeric comparison policy used by every verifier: relative tolerance with
// an absolute floor. All zoo functions are sums/products of O(n^2) doubles,
// so 1e-9 relative headroom is generous.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  // Slack allowed for a comparison whose natural magnitude is |scale|.
  double slack(double scale) const { return std::max(abs, rel * std::fabs(scale)); }

  // x >= y, allowing slack at the given magnitude.
  bool geq(double x, double y, double scale) const { return x >= y - slack(scale); }

  bool near_zero(double x, double scale) const { return std::fabs(x) <= slack(scale); }

  bool close(double x, double y, double scale) const { return near_zero(x - y, scale); }
};

}  // namespace wsub

#endif  // WSUB_TOLERANCE_HPP_
