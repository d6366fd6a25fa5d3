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

#include "wsub/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wsub {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Json to_json(const Subset& s) { return Json(s.elements()); }

Json to_json(const PairRatio& r) {
  Json j;
  j["a"] = to_json(r.a);
  j["b"] = to_json(r.b);
  j["base_value"] = r.base_value;
  j["sum_marginals"] = r.sum_marginals;
  j["joint_marginal"] = r.joint_marginal;
  j["sign"] = to_name(r.sign);
  return j;
}

Json to_json(const RatioReport& r) {
  Json j;
  j["exhaustive"] = r.exhaustive;
  j["pairs_scanned"] = r.pairs_scanned;
  j["positive_pairs"] = r.n_positive;
  j["negative_pairs"] = r.n_negative;
  j["zero_pairs"] = r.n_zero;
  j["infeasible"] = r.infeasible;
  if (r.infeasible_witness) j["infeasible_witness"] = to_json(*r.infeasible_witness);
  if (r.fitted_weak_gamma) j["fitted_weak_gamma"] = *r.fitted_weak_gamma;
  if (r.fitted_pseudo_gamma) {
    j["fitted_pseudo_gamma"] = *r.fitted_pseudo_gamma;
    j["pseudo_lower_bound"] = r.pseudo_lower_bound;
  }
  j["raw_weak_min"] = std::isfinite(r.raw_weak_min) ? Json(r.raw_weak_min) : Json();
  Json grid = Json::array();
  for (const AbMinimum& cell : r.minima) {
    grid.push_back({{"a", cell.a}, {"b", cell.b}, {"min_ratio", cell.min_ratio},
                    {"count", cell.count}});
  }
  j["minima"] = std::move(grid);
  return j;
}

Json to_json(const GammaProfileReport& r) {
  Json j;
  j["gamma"] = r.gamma;
  Json raw = Json::array();
  for (double g : r.raw_gamma) raw.push_back(std::isfinite(g) ? Json(g) : Json());
  j["raw_gamma"] = std::move(raw);
  j["vacuous"] = r.vacuous;
  j["negative_pairs"] = r.n_negative;
  j["zero_pairs"] = r.n_zero;
  j["negatives_min_form_ok"] = r.negatives_min_form_ok;
  if (r.min_form_witness) j["min_form_witness"] = to_json(*r.min_form_witness);
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["family"] = to_name(r.family);
  j["trials"] = r.trials;
  j["n"] = r.n;
  j["k"] = r.k;
  j["seed"] = r.seed;
  j["pairs_checked"] = r.pairs_checked;
  j["passed"] = r.passed;
  Json vio = Json::array();
  for (const BoundViolation& v : r.violations) {
    vio.push_back({{"instance", v.instance},
                   {"a", to_json(v.a)},
                   {"b", to_json(v.b)},
                   {"sum_marginals", v.sum_marginals},
                   {"joint_marginal", v.joint_marginal},
                   {"bound", v.bound},
                   {"detail", v.detail}});
  }
  j["violations"] = std::move(vio);
  return j;
}

Json to_json(const GreedyTrace& t) {
  Json j;
  j["n_original"] = t.n_original;
  j["k"] = t.k;
  j["seed"] = t.seed;
  j["initial"] = to_json(t.initial);
  Json iters = Json::array();
  for (const IterationRecord& it : t.iterations) {
    iters.push_back({{"candidates", it.candidates},
                     {"marginals", it.marginals},
                     {"chosen", it.chosen},
                     {"value_after", it.value_after}});
  }
  j["iterations"] = std::move(iters);
  j["final_set"] = to_json(t.final_set);
  j["final_value"] = t.final_value;
  j["queries"] = t.queries;
  return j;
}

Json to_json(const RunResult& r) {
  Json j;
  j["set"] = to_json(r.set);
  j["value"] = r.value;
  j["queries"] = r.queries;
  return j;
}

Json to_json(const ExpectationResult& r) {
  Json j;
  j["exact_expected_value"] = r.exact_expected_value;
  j["num_leaves"] = r.num_leaves;
  j["expected_value"] = r.expected_value;
  if (r.has_reference) {
    j["reference"] = to_json(r.reference);
    j["expected_union_value"] = r.expected_union_value;
  }
  return j;
}

Json to_json(const MonteCarloResult& r) {
  Json j;
  j["mean"] = r.mean;
  j["stderr"] = r.stderr_of_mean;
  j["min"] = r.min_value;
  j["max"] = r.max_value;
  j["trials"] = r.trials;
  return j;
}

Json to_json(const PropertyCheck& c) {
  Json j;
  j["holds"] = c.holds;
  j["exhaustive"] = c.exhaustive;
  j["cases_checked"] = c.cases_checked;
  if (!c.holds) {
    j["witness_a"] = to_json(c.witness_a);
    if (c.witness_b.capacity() > 0) j["witness_b"] = to_json(c.witness_b);
    if (c.witness_element >= 0) j["witness_element"] = c.witness_element;
    j["detail"] = c.detail;
  }
  return j;
}

Json to_json(const LemmaCheck& c) {
  Json j;
  j["holds"] = c.holds;
  j["cases_checked"] = c.cases_checked;
  if (!c.holds) j["witness"] = c.witness;
  return j;
}

// ---------------------------------------------------------------------------
// Function-spec schema
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<double>> rows_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected array of rows");
  std::vector<std::vector<double>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw std::invalid_argument(std::string(what) + ": row is not an array");
    rows.push_back(row.get<std::vector<double>>());
  }
  return rows;
}

}  // namespace

DistanceMatrix load_distance_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open distance CSV: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("distance CSV is empty: " + path);
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw std::invalid_argument("distance CSV is not square: " + path);
    }
  }
  return DistanceMatrix::from_rows(rows);
}

FunctionSpec spec_from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw std::invalid_argument("function spec: expected an object with a \"type\" string");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "modular") {
    return FunctionSpec::modular(j.at("weights").get<std::vector<double>>());
  }
  if (type == "coverage") {
    CoverageInstance inst;
    inst.item_weights = j.at("item_weights").get<std::vector<double>>();
    inst.num_items = static_cast<int>(inst.item_weights.size());
    inst.covers = j.at("covers").get<std::vector<std::vector<int>>>();
    inst.n = static_cast<int>(inst.covers.size());
    return FunctionSpec::coverage_fn(std::move(inst));
  }
  if (type == "metric_diversity") {
    if (j.contains("distances_csv")) {
      std::filesystem::path p = j["distances_csv"].get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
      const DistanceMatrix m = load_distance_csv(p.string());
      std::vector<std::vector<double>> rows(m.n, std::vector<double>(m.n, 0.0));
      for (int i = 0; i < m.n; ++i) {
        for (int c = 0; c < m.n; ++c) rows[i][c] = m(i, c);
      }
      return FunctionSpec::metric_diversity(std::move(rows));
    }
    return FunctionSpec::metric_diversity(rows_from_json(j.at("distances"), "metric_diversity"));
  }
  if (type == "graph_cut") {
    return FunctionSpec::graph_cut(rows_from_json(j.at("weights"), "graph_cut"));
  }
  if (type == "sum") {
    std::vector<FunctionSpec> terms;
    for (const Json& t : j.at("terms")) terms.push_back(spec_from_json(t, base_dir));
    return FunctionSpec::sum(std::move(terms));
  }
  if (type == "product") {
    const Json& factors = j.at("factors");
    if (!factors.is_array() || factors.size() != 2) {
      throw std::invalid_argument("product spec: \"factors\" must hold exactly two specs");
    }
    return FunctionSpec::product(spec_from_json(factors[0], base_dir),
                                 spec_from_json(factors[1], base_dir));
  }
  if (type == "card_scaled") {
    return FunctionSpec::card_scaled(spec_from_json(j.at("inner"), base_dir));
  }
  if (type == "card_divided") {
    return FunctionSpec::card_divided(spec_from_json(j.at("inner"), base_dir));
  }
  if (type == "table") {
    return FunctionSpec::table(j.at("n").get<int>(), j.at("values").get<std::vector<double>>());
  }
  throw std::invalid_argument("function spec: unknown type \"" + type + "\"");
}

Json spec_to_json(const FunctionSpec& spec) {
  Json j;
  switch (spec.kind) {
    case FunctionSpec::Kind::kModular:
      j["type"] = "modular";
      j["weights"] = spec.weights;
      return j;
    case FunctionSpec::Kind::kCoverage:
      j["type"] = "coverage";
      j["item_weights"] = spec.coverage.item_weights;
      j["covers"] = spec.coverage.covers;
      return j;
    case FunctionSpec::Kind::kMetricDiversity:
      j["type"] = "metric_diversity";
      j["distances"] = spec.matrix;
      return j;
    case FunctionSpec::Kind::kGraphCut:
      j["type"] = "graph_cut";
      j["weights"] = spec.matrix;
      return j;
    case FunctionSpec::Kind::kSum: {
      j["type"] = "sum";
      Json terms = Json::array();
      for (const auto& c : spec.children) terms.push_back(spec_to_json(c));
      j["terms"] = std::move(terms);
      return j;
    }
    case FunctionSpec::Kind::kProduct:
      j["type"] = "product";
      j["factors"] = Json::array({spec_to_json(spec.children[0]), spec_to_json(spec.children[1])});
      return j;
    case FunctionSpec::Kind::kCardScaled:
      j["type"] = "card_scaled";
      j["inner"] = spec_to_json(spec.children[0]);
      return j;
    case FunctionSpec::Kind::kCardDivided:
      j["type"] = "card_divided";
      j["inner"] = spec_to_json(spec.children[0]);
      return j;
    case FunctionSpec::Kind::kTable:
      j["type"] = "table";
      j["n"] = spec.table_n;
      j["values"] = spec.table_values;
      return j;
  }
  throw std::invalid_argument("spec_to_json: unknown kind");
}

void write_minima_csv(std::ostream& os, const RatioReport& report) {
  os << "a,b,min_ratio,count\n";
  for (const AbMinimum& cell : report.minima) {
    os << cell.a << ',' << cell.b << ',' << format_double(cell.min_ratio) << ',' << cell.count
       << '\n';
  }
}

}  // namespace wsub
