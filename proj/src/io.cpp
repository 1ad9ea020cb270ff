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

#include "subsec/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "subsec/errors.hpp"

namespace subsec {

using nlohmann::ordered_json;

double round_sig12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

Variant parse_variant(const std::string& name) {
  if (name == "cardinality") return Variant::kCardinality;
  if (name == "matching") return Variant::kMatching;
  if (name == "packing") return Variant::kPacking;
  throw ValidationError("variant: expected cardinality|matching|packing, got " +
                        name);
}

namespace {

ordered_json rounded(double v) { return ordered_json(round_sig12(v)); }

ordered_json rounded_vector(const std::vector<double>& values) {
  ordered_json arr = ordered_json::array();
  for (double v : values) arr.push_back(round_sig12(v));
  return arr;
}

std::vector<double> double_vector(const ordered_json& j, const char* where) {
  if (!j.is_array()) {
    throw ValidationError(std::string(where) + ": expected an array");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw ValidationError(std::string(where) + ": expected numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

const ordered_json& require_field(const ordered_json& j, const char* field,
                                  const char* where) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw ValidationError(std::string(where) + ": missing field '" + field +
                          "'");
  }
  return *it;
}

}  // namespace

ordered_json oracle_spec_to_json(const OracleSpec& spec) {
  ordered_json j;
  j["family"] = spec.family;
  if (spec.family == "coverage") {
    j["covers"] = spec.covers;
    j["element_weights"] = rounded_vector(spec.element_weights);
  } else if (spec.family == "modular" || spec.family == "concave-sqrt") {
    j["weights"] = rounded_vector(spec.weights);
  } else if (spec.family == "concave-cap") {
    j["weights"] = rounded_vector(spec.weights);
    j["cap"] = rounded(spec.cap);
  } else if (spec.family == "edge-valued") {
    if (!spec.inner) throw ValidationError("oracle: edge-valued needs inner");
    j["inner"] = oracle_spec_to_json(*spec.inner);
  } else {
    throw ValidationError("oracle.family: unknown family " + spec.family);
  }
  return j;
}

OracleSpec oracle_spec_from_json(const ordered_json& j) {
  OracleSpec spec;
  spec.family = require_field(j, "family", "oracle").get<std::string>();
  if (spec.family == "coverage") {
    const ordered_json& covers = require_field(j, "covers", "oracle");
    for (const auto& cover : covers) {
      std::vector<int> items;
      for (const auto& e : cover) items.push_back(e.get<int>());
      spec.covers.push_back(std::move(items));
    }
    spec.element_weights = double_vector(
        require_field(j, "element_weights", "oracle"),
        "oracle.element_weights");
  } else if (spec.family == "modular" || spec.family == "concave-sqrt") {
    spec.weights =
        double_vector(require_field(j, "weights", "oracle"), "oracle.weights");
  } else if (spec.family == "concave-cap") {
    spec.weights =
        double_vector(require_field(j, "weights", "oracle"), "oracle.weights");
    spec.cap = require_field(j, "cap", "oracle").get<double>();
  } else if (spec.family == "edge-valued") {
    spec.inner = std::make_shared<OracleSpec>(
        oracle_spec_from_json(require_field(j, "inner", "oracle")));
  } else {
    throw ValidationError("oracle.family: unknown family " + spec.family);
  }
  return spec;
}

ordered_json instance_to_json(const Instance& instance) {
  ordered_json j;
  j["schema_version"] = kInstanceSchemaVersion;
  j["variant"] = variant_name(instance.variant);
  switch (instance.variant) {
    case Variant::kCardinality: {
      const CardinalityInstance& ci = instance.cardinality();
      j["n"] = ci.ground.n;
      j["oracle"] = oracle_spec_to_json(ci.oracle.to_spec());
      j["cardinality"] = ordered_json{{"k", ci.k}};
      break;
    }
    case Variant::kMatching: {
      const MatchingInstance& mi = instance.matching();
      j["n"] = mi.l_size;
      j["oracle"] = oracle_spec_to_json(mi.oracle.to_spec());
      ordered_json edges = ordered_json::array();
      for (const Edge& e : mi.edges) {
        edges.push_back(ordered_json::array({e.l, e.r}));
      }
      j["matching"] = ordered_json{{"r_size", mi.r_size}, {"edges", edges}};
      break;
    }
    case Variant::kPacking: {
      const PackingData& pd = instance.packing();
      j["n"] = pd.core.n();
      j["oracle"] = oracle_spec_to_json(pd.core.oracle.to_spec());
      ordered_json a = ordered_json::array();
      for (const auto& row : pd.core.a) a.push_back(rounded_vector(row));
      ordered_json packing;
      packing["a"] = a;
      packing["b"] = rounded_vector(pd.core.b);
      if (pd.declared_capacity_ratio) {
        packing["declared_capacity_ratio"] =
            rounded(*pd.declared_capacity_ratio);
      }
      if (pd.declared_column_sparsity) {
        packing["declared_column_sparsity"] = *pd.declared_column_sparsity;
      }
      j["packing"] = packing;
      break;
    }
  }
  return j;
}

Instance instance_from_json(const ordered_json& j) {
  int version = require_field(j, "schema_version", "instance").get<int>();
  if (version != kInstanceSchemaVersion) {
    throw ValidationError("schema_version: expected " +
                          std::to_string(kInstanceSchemaVersion) + ", got " +
                          std::to_string(version));
  }
  Variant variant =
      parse_variant(require_field(j, "variant", "instance").get<std::string>());
  int n = require_field(j, "n", "instance").get<int>();
  if (n < 1) throw ValidationError("n: must be >= 1");
  OracleSpec spec =
      oracle_spec_from_json(require_field(j, "oracle", "instance"));

  Instance out;
  out.variant = variant;
  switch (variant) {
    case Variant::kCardinality: {
      if (spec.family == "edge-valued") {
        throw ValidationError(
            "oracle.family: edge-valued is only valid for matching");
      }
      ValueOracle oracle = ValueOracle::from_spec(spec);
      if (oracle.ground_size() != n) {
        throw ValidationError("oracle: size disagrees with n");
      }
      const ordered_json& card = require_field(j, "cardinality", "instance");
      int k = require_field(card, "k", "cardinality").get<int>();
      if (k < 0) throw ValidationError("cardinality.k: must be >= 0");
      out.payload =
          CardinalityInstance{GroundSet(n), std::move(oracle), k};
      return out;
    }
    case Variant::kMatching: {
      if (spec.family != "edge-valued") {
        throw ValidationError(
            "oracle.family: matching instances need an edge-valued oracle");
      }
      const ordered_json& matching = require_field(j, "matching", "instance");
      int r_size = require_field(matching, "r_size", "matching").get<int>();
      if (r_size < 1) throw ValidationError("matching.r_size: must be >= 1");
      const ordered_json& edges_json =
          require_field(matching, "edges", "matching");
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const auto& e = edges_json[i];
        if (!e.is_array() || e.size() != 2) {
          throw ValidationError("matching.edges[" + std::to_string(i) +
                                "]: expected [l, r]");
        }
        Edge edge{e[0].get<int>(), e[1].get<int>()};
        if (edge.l < 0 || edge.l >= n || edge.r < 0 || edge.r >= r_size) {
          throw ValidationError("matching.edges[" + std::to_string(i) +
                                "]: endpoint out of range");
        }
        edges.push_back(edge);
      }
      for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].l < edges[i - 1].l ||
            (edges[i].l == edges[i - 1].l && edges[i].r <= edges[i - 1].r)) {
          throw ValidationError("matching.edges: must be sorted by (l, r) "
                                "with no duplicates");
        }
      }
      ValueOracle oracle = ValueOracle::from_spec(spec);
      if (oracle.ground_size() != static_cast<int>(edges.size())) {
        throw ValidationError("oracle: size disagrees with the edge count");
      }
      out.payload = MatchingInstance{n, r_size, std::move(edges),
                                     std::move(oracle)};
      return out;
    }
    case Variant::kPacking: {
      if (spec.family == "edge-valued") {
        throw ValidationError(
            "oracle.family: edge-valued is only valid for matching");
      }
      ValueOracle oracle = ValueOracle::from_spec(spec);
      if (oracle.ground_size() != n) {
        throw ValidationError("oracle: size disagrees with n");
      }
      const ordered_json& packing = require_field(j, "packing", "instance");
      const ordered_json& a_json = require_field(packing, "a", "packing");
      std::vector<std::vector<double>> a;
      for (std::size_t i = 0; i < a_json.size(); ++i) {
        std::vector<double> row = double_vector(
            a_json[i], ("packing.a[" + std::to_string(i) + "]").c_str());
        if (static_cast<int>(row.size()) != n) {
          throw ValidationError("packing.a[" + std::to_string(i) +
                                "]: row length must equal n");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (!(row[c] >= 0.0)) {
            throw ValidationError("packing.a[" + std::to_string(i) + "][" +
                                  std::to_string(c) +
                                  "]: nonnegative coefficients required");
          }
        }
        a.push_back(std::move(row));
      }
      std::vector<double> b =
          double_vector(require_field(packing, "b", "packing"), "packing.b");
      if (b.size() != a.size()) {
        throw ValidationError("packing.b: length must match the row count");
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (!(b[i] > 0.0)) {
          throw ValidationError("packing.b[" + std::to_string(i) +
                                "]: positive capacity required");
        }
      }
      PackingInstance core(GroundSet(n), std::move(oracle), std::move(a),
                           std::move(b));
      PackingData data{std::move(core), std::nullopt, std::nullopt};
      if (packing.contains("declared_capacity_ratio")) {
        double declared = packing["declared_capacity_ratio"].get<double>();
        double actual = data.core.capacity_ratio();
        if (!(std::abs(declared - actual) <=
              1e-9 * std::max(1.0, std::abs(actual)))) {
          throw ValidationError(
              "packing.declared_capacity_ratio: disagrees with the value "
              "recomputed from A and b");
        }
        data.declared_capacity_ratio = declared;
      }
      if (packing.contains("declared_column_sparsity")) {
        int declared = packing["declared_column_sparsity"].get<int>();
        if (declared != data.core.column_sparsity()) {
          throw ValidationError(
              "packing.declared_column_sparsity: disagrees with the value "
              "recomputed from A");
        }
        data.declared_column_sparsity = declared;
      }
      out.payload = std::move(data);
      return out;
    }
  }
  throw ValidationError("variant: unknown");
}

void save_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << text;
  if (!out) throw InputError("write failed: " + path);
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_instance(const Instance& instance, const std::string& path) {
  save_text(instance_to_json(instance).dump(2) + "\n", path);
}

Instance load_instance(const std::string& path) {
  std::string text = load_text(path);
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("parse error in ") + path + ": " +
                          e.what());
  }
  return instance_from_json(j);
}

namespace {

ordered_json algo_to_json(const AlgoConfig& algo, Variant variant) {
  ordered_json j;
  j["solver"] = algo.solver;
  j["p"] = rounded(algo.resolved_p(variant));
  j["known_parameters"] = algo.known_parameters;
  j["cg_steps"] = algo.cg_steps;
  j["cg_samples"] = algo.cg_samples;
  j["cg_gradient"] = algo.cg_gradient;
  j["exhaustive"] = algo.exhaustive;
  j["cache_offline_solver"] = algo.cache_offline_solver;
  return j;
}

AlgoConfig algo_from_json(const ordered_json& j) {
  AlgoConfig algo;
  algo.solver = require_field(j, "solver", "config.algo").get<std::string>();
  algo.p = require_field(j, "p", "config.algo").get<double>();
  algo.known_parameters =
      require_field(j, "known_parameters", "config.algo").get<bool>();
  algo.cg_steps = require_field(j, "cg_steps", "config.algo").get<int>();
  algo.cg_samples = require_field(j, "cg_samples", "config.algo").get<int>();
  algo.cg_gradient =
      require_field(j, "cg_gradient", "config.algo").get<std::string>();
  algo.exhaustive = require_field(j, "exhaustive", "config.algo").get<bool>();
  algo.cache_offline_solver =
      require_field(j, "cache_offline_solver", "config.algo").get<bool>();
  return algo;
}

ordered_json bound_to_json(const BoundReport& b) {
  ordered_json j;
  j["kind"] = b.kind;
  j["k"] = b.k;
  j["alpha"] = rounded(b.alpha);
  j["capacity_ratio"] = rounded(b.capacity_ratio);
  j["column_sparsity"] = b.column_sparsity;
  j["known_parameters"] = b.known_parameters;
  j["value"] = rounded(b.value);
  j["caveat"] = b.caveat;
  return j;
}

BoundReport bound_from_json(const ordered_json& j) {
  BoundReport b;
  b.kind = j.at("kind").get<std::string>();
  b.k = j.at("k").get<int>();
  b.alpha = j.at("alpha").get<double>();
  b.capacity_ratio = j.at("capacity_ratio").get<double>();
  b.column_sparsity = j.at("column_sparsity").get<int>();
  b.known_parameters = j.at("known_parameters").get<bool>();
  b.value = j.at("value").get<double>();
  b.caveat = j.at("caveat").get<bool>();
  return b;
}

ordered_json audit_to_json(const RateAudit& audit) {
  ordered_json rows = ordered_json::array();
  for (const RateRow& row : audit.rows) {
    ordered_json r;
    r["round"] = row.round;
    r["threshold"] = rounded(row.threshold);
    r["rate"] = rounded(row.rate);
    r["std_err"] = rounded(row.std_err);
    r["tentative"] = row.tentative;
    r["violated"] = row.violated;
    rows.push_back(r);
  }
  return ordered_json{{"violations", audit.violations}, {"rows", rows}};
}

RateAudit audit_from_json(const ordered_json& j) {
  RateAudit audit;
  audit.violations = j.at("violations").get<long>();
  for (const auto& r : j.at("rows")) {
    RateRow row;
    row.round = r.at("round").get<int>();
    row.threshold = r.at("threshold").get<double>();
    row.rate = r.at("rate").get<double>();
    row.std_err = r.at("std_err").get<double>();
    row.tentative = r.at("tentative").get<long>();
    row.violated = r.at("violated").get<bool>();
    audit.rows.push_back(row);
  }
  return audit;
}

}  // namespace

ordered_json trial_stats_to_json(const TrialStats& stats) {
  ordered_json j;
  j["trials"] = stats.trials;
  j["mean_ratio"] = rounded(stats.mean_ratio);
  j["std_err"] = rounded(stats.std_err);
  j["ci_lo"] = rounded(stats.ci_lo);
  j["ci_hi"] = rounded(stats.ci_hi);
  j["per_round_acceptance_rate"] =
      rounded_vector(stats.per_round_acceptance_rate);
  j["opt_value"] = rounded(stats.opt_value);
  j["benchmark_kind"] = stats.benchmark_kind;
  return j;
}

namespace {

TrialStats trial_stats_from_json(const ordered_json& j) {
  TrialStats stats;
  stats.trials = j.at("trials").get<long>();
  stats.mean_ratio = j.at("mean_ratio").get<double>();
  stats.std_err = j.at("std_err").get<double>();
  stats.ci_lo = j.at("ci_lo").get<double>();
  stats.ci_hi = j.at("ci_hi").get<double>();
  stats.per_round_acceptance_rate =
      double_vector(j.at("per_round_acceptance_rate"),
                    "stats.per_round_acceptance_rate");
  stats.opt_value = j.at("opt_value").get<double>();
  stats.benchmark_kind = j.at("benchmark_kind").get<std::string>();
  return stats;
}

}  // namespace

Report make_report(const Instance& instance, const AlgoConfig& algo,
                   long trials, std::uint64_t master_seed,
                   const EstimateResult& result) {
  Report report;
  report.master_seed = master_seed;
  report.trials = trials;
  report.algo = algo;
  report.instance = instance;
  report.benchmark = result.benchmark;
  report.stats = result.stats;
  report.rates = result.rates;
  switch (instance.variant) {
    case Variant::kCardinality: {
      int k = instance.cardinality().k;
      if (k >= 1) {
        report.bounds.push_back(bound_k_secretary(k, 1.0));
        report.bounds.push_back(bound_greedy_k_secretary(k));
      }
      break;
    }
    case Variant::kMatching: {
      report.bounds.push_back(bound_matching(1.0));
      report.bounds.push_back(bound_matching(1.0 / 3.0));
      report.collision_audit = check_matching_collision_rate(
          result.rates, instance.matching().l_size,
          algo.resolved_p(Variant::kMatching));
      break;
    }
    case Variant::kPacking: {
      const PackingInstance& pi = instance.packing().core;
      double ratio = pi.capacity_ratio();
      int d = pi.column_sparsity();
      if (ratio >= 2.0 && d >= 1 && !std::isinf(ratio)) {
        report.bounds.push_back(bound_packing(1.0, ratio, d, false));
        report.bounds.push_back(bound_packing(1.0, ratio, d, true));
      }
      if (d >= 1 && ratio > 1.0) {
        report.packing_audit =
            check_packing_feasible_rate(result.rates, pi.n(), pi.psi());
      }
      break;
    }
  }
  return report;
}

ordered_json report_to_json(const Report& report) {
  ordered_json j;
  j["schema_version"] = kInstanceSchemaVersion;
  j["kind"] = "estimate-report";
  j["code_version"] = report.code_version;
  ordered_json config;
  config["master_seed"] = report.master_seed;
  config["trials"] = report.trials;
  config["algo"] = algo_to_json(report.algo, report.instance.variant);
  j["config"] = config;
  j["instance"] = instance_to_json(report.instance);
  ordered_json bench;
  bench["value"] = rounded(report.benchmark.value);
  bench["kind"] = report.benchmark.kind;
  if (report.benchmark.integral_value) {
    bench["integral_value"] = rounded(*report.benchmark.integral_value);
  }
  if (report.benchmark.fractional_value) {
    bench["fractional_value"] = rounded(*report.benchmark.fractional_value);
  }
  j["benchmark"] = bench;
  j["stats"] = trial_stats_to_json(report.stats);
  ordered_json rates = ordered_json::array();
  for (std::size_t r = 0; r < report.rates.size(); ++r) {
    ordered_json row;
    row["round"] = static_cast<int>(r + 1);
    row["tentative"] = report.rates[r].tentative;
    row["feasible"] = report.rates[r].feasible;
    row["accepted"] = report.rates[r].accepted;
    rates.push_back(row);
  }
  j["rates"] = rates;
  ordered_json bounds = ordered_json::array();
  for (const BoundReport& b : report.bounds) bounds.push_back(bound_to_json(b));
  j["bounds"] = bounds;
  if (report.collision_audit) {
    j["collision_audit"] = audit_to_json(*report.collision_audit);
  }
  if (report.packing_audit) {
    j["packing_audit"] = audit_to_json(*report.packing_audit);
  }
  return j;
}

Report report_from_json(const ordered_json& j) {
  Report report;
  report.code_version = j.at("code_version").get<std::string>();
  const ordered_json& config = j.at("config");
  report.master_seed = config.at("master_seed").get<std::uint64_t>();
  report.trials = config.at("trials").get<long>();
  report.algo = algo_from_json(config.at("algo"));
  report.instance = instance_from_json(j.at("instance"));
  const ordered_json& bench = j.at("benchmark");
  report.benchmark.value = bench.at("value").get<double>();
  report.benchmark.kind = bench.at("kind").get<std::string>();
  if (bench.contains("integral_value")) {
    report.benchmark.integral_value = bench["integral_value"].get<double>();
  }
  if (bench.contains("fractional_value")) {
    report.benchmark.fractional_value =
        bench["fractional_value"].get<double>();
  }
  report.stats = trial_stats_from_json(j.at("stats"));
  for (const auto& row : j.at("rates")) {
    RoundRates rates;
    rates.tentative = row.at("tentative").get<long>();
    rates.feasible = row.at("feasible").get<long>();
    rates.accepted = row.at("accepted").get<long>();
    report.rates.push_back(rates);
  }
  for (const auto& b : j.at("bounds")) {
    report.bounds.push_back(bound_from_json(b));
  }
  if (j.contains("collision_audit")) {
    report.collision_audit = audit_from_json(j["collision_audit"]);
  }
  if (j.contains("packing_audit")) {
    report.packing_audit = audit_from_json(j["packing_audit"]);
  }
  return report;
}

namespace {

std::string csv_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", round_sig12(v));
  return buf;
}

}  // namespace

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "# stats\n";
  out << "trials,mean_ratio,std_err,ci_lo,ci_hi,opt_value,benchmark_kind\n";
  out << report.stats.trials << ',' << csv_number(report.stats.mean_ratio)
      << ',' << csv_number(report.stats.std_err) << ','
      << csv_number(report.stats.ci_lo) << ','
      << csv_number(report.stats.ci_hi) << ','
      << csv_number(report.stats.opt_value) << ','
      << report.stats.benchmark_kind << '\n';
  out << "# rates\n";
  out << "round,tentative,feasible,accepted,acceptance_rate\n";
  for (std::size_t r = 0; r < report.rates.size(); ++r) {
    out << (r + 1) << ',' << report.rates[r].tentative << ','
        << report.rates[r].feasible << ',' << report.rates[r].accepted << ','
        << csv_number(report.stats.per_round_acceptance_rate[r]) << '\n';
  }
  out << "# bounds\n";
  out << "kind,k,alpha,capacity_ratio,column_sparsity,known_parameters,value,"
         "caveat\n";
  for (const BoundReport& b : report.bounds) {
    out << b.kind << ',' << b.k << ',' << csv_number(b.alpha) << ','
        << csv_number(b.capacity_ratio) << ',' << b.column_sparsity << ','
        << (b.known_parameters ? 1 : 0) << ',' << csv_number(b.value) << ','
        << (b.caveat ? 1 : 0) << '\n';
  }
  auto emit_audit = [&out](const char* name, const RateAudit& audit) {
    out << "# " << name << "\n";
    out << "round,threshold,rate,std_err,tentative,violated\n";
    for (const RateRow& row : audit.rows) {
      out << row.round << ',' << csv_number(row.threshold) << ','
          << csv_number(row.rate) << ',' << csv_number(row.std_err) << ','
          << row.tentative << ',' << (row.violated ? 1 : 0) << '\n';
    }
  };
  if (report.collision_audit) emit_audit("collision_audit",
                                         *report.collision_audit);
  if (report.packing_audit) emit_audit("packing_audit", *report.packing_audit);
  return out.str();
}

ordered_json run_record_to_json(const RunRecord& record) {
  ordered_json j;
  j["variant"] = variant_name(record.variant);
  j["seed"] = record.seed;
  j["sample_size"] = record.sample_size;
  j["final_value"] = rounded(record.final_value);
  j["final_selection"] = record.final_selection;
  if (!record.final_x.empty()) {
    ordered_json xs = ordered_json::array();
    for (std::uint8_t v : record.final_x) xs.push_back(static_cast<int>(v));
    j["final_x"] = xs;
  }
  if (!record.warning.empty()) j["warning"] = record.warning;
  ordered_json rounds = ordered_json::array();
  for (const RoundEntry& entry : record.rounds) {
    ordered_json e;
    e["round"] = entry.round;
    e["item"] = entry.item;
    e["solver_ran"] = entry.solver_ran;
    e["tentative"] = entry.tentative;
    e["feasible"] = entry.feasible;
    e["accepted"] = entry.accepted;
    if (entry.solver_ran) e["offline_solution"] = entry.offline_solution;
    if (!entry.fractional.empty()) {
      e["fractional"] = rounded_vector(entry.fractional);
    }
    rounds.push_back(e);
  }
  j["rounds"] = rounds;
  return j;
}

}  // namespace subsec
