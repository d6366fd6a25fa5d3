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

#ifndef WSUB_SERIALIZE_HPP_
#define WSUB_SERIALIZE_HPP_

#include <json.hpp>
#include <ostream>
#include <string>

#include "wsub/greedy.hpp"
#include "wsub/ratio.hpp"
#include "wsub/zoo.hpp"

namespace wsub {

using Json = nlohmann::json;

// Stable shortest-round-trip formatting; CSV cells use '.' decimals and
// never need quoting.
std::string format_double(double x);

Json to_json(const Subset& s);
Json to_json(const PairRatio& r);
Json to_json(const RatioReport& r);
Json to_json(const GammaProfileReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const GreedyTrace& t);
Json to_json(const RunResult& r);
Json to_json(const ExpectationResult& r);
Json to_json(const MonteCarloResult& r);
Json to_json(const PropertyCheck& c);
Json to_json(const LemmaCheck& c);

// Function-spec JSON schema, documented in the README:
//   {"type":"modular","weights":[...]}
//   {"type":"coverage","item_weights":[...],"covers":[[items...]...]}
//   {"type":"metric_diversity","distances":[[...]...]}            (or "distances_csv": path)
//   {"type":"graph_cut","weights":[[...]...]}
//   {"type":"sum","terms":[spec...]}
//   {"type":"product","factors":[spec, spec]}
//   {"type":"card_scaled","inner":spec}
//   {"type":"card_divided","inner":spec}
//   {"type":"table","n":N,"values":[2^N reals]}
// Relative CSV paths resolve against base_dir.
FunctionSpec spec_from_json(const Json& j, const std::string& base_dir = "");
Json spec_to_json(const FunctionSpec& spec);

// n rows of n comma-separated reals.
DistanceMatrix load_distance_csv(const std::string& path);

// Per-(a,b) positive-class minima: columns a, b, min_ratio, count.
void write_minima_csv(std::ostream& os, const RatioReport& report);

}  // namespace wsub

#endif  // WSUB_SERIALIZE_HPP_
