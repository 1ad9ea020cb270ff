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

#include "subsec/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "subsec/bounds.hpp"
#include "subsec/errors.hpp"
#include "subsec/harness.hpp"
#include "subsec/io.hpp"
#include "subsec/properties.hpp"
#include "subsec/rng.hpp"

namespace subsec {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailure = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    save_text(text, out_path);
  }
}

// "3" or "1..10" -> inclusive integer range.
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw InputError("range upper end below lower end: " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw InputError("cannot parse range: " + text);
  } catch (const std::out_of_range&) {
    throw InputError("range value out of range: " + text);
  }
}

std::string format_fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.5f", v);
  return buf;
}

std::string format_sig12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", round_sig12(v));
  return buf;
}

struct CommonOpts {
  std::string instance_path;
  std::string out_path;
  std::string format = "table";
  std::uint64_t seed = 0;
  long trials = 1000;
};

struct AlgoOpts {
  std::string solver = "greedy";
  double p = -1.0;  // negative means variant default
  bool known = false;
  int cg_steps = 100;
  int cg_samples = 1000;
  std::string cg_gradient = "auto";
  bool exhaustive = false;

  AlgoConfig to_config() const {
    AlgoConfig config;
    config.solver = solver;
    if (p > 0.0) config.p = p;
    config.known_parameters = known;
    config.cg_steps = cg_steps;
    config.cg_samples = cg_samples;
    config.cg_gradient = cg_gradient;
    config.exhaustive = exhaustive;
    return config;
  }
};

void add_algo_options(CLI::App* cmd, AlgoOpts* opts) {
  cmd->add_option("--solver", opts->solver,
                  "Offline solver: greedy or brute-force")
      ->check(CLI::IsMember({"greedy", "brute-force"}));
  cmd->add_option("--p", opts->p, "Sample fraction in (0,1)");
  cmd->add_flag("--known", opts->known,
                "Packing: sampling phase from the known (B, d)");
  cmd->add_option("--cg-steps", opts->cg_steps, "Continuous greedy steps");
  cmd->add_option("--cg-samples", opts->cg_samples,
                  "Monte Carlo samples per gradient step");
  cmd->add_option("--cg-gradient", opts->cg_gradient,
                  "Gradient mode: auto|closed-form|enum|monte-carlo")
      ->check(CLI::IsMember({"auto", "closed-form", "enum", "monte-carlo"}));
  cmd->add_flag("--exhaustive", opts->exhaustive,
                "Enumerate all n! arrival orders (n <= 8)");
}

int cmd_gen(const GenParams& params, const std::string& out_path) {
  Instance instance = gen_instance(params);
  std::string text = instance_to_json(instance).dump(2) + "\n";
  emit(text, out_path);
  return kOk;
}

int cmd_run(const CommonOpts& common, const AlgoOpts& algo) {
  Instance instance = load_instance(common.instance_path);
  AlgoConfig config = algo.to_config();
  int n = instance.ground_size();
  ArrivalOrder order =
      ArrivalOrder::sample(n, derive_seed(common.seed, 0x6f726472ULL, 0));
  RunRecord record;
  switch (instance.variant) {
    case Variant::kCardinality: {
      const CardinalityInstance& ci = instance.cardinality();
      CardinalitySolver solver;
      solver.k = ci.k;
      solver.kind = config.solver == "brute-force"
                        ? CardinalitySolver::Kind::kBruteForce
                        : CardinalitySolver::Kind::kGreedy;
      record = run_k_secretary(ci.oracle, n, ci.k, solver,
                               config.resolved_p(instance.variant), order);
      break;
    }
    case Variant::kMatching: {
      const MatchingInstance& mi = instance.matching();
      MatchingSolver solver;
      solver.kind = config.solver == "brute-force"
                        ? MatchingSolver::Kind::kBruteForce
                        : MatchingSolver::Kind::kGreedy;
      record = run_matching(mi.oracle, mi.l_size, mi.r_size, mi.edges, solver,
                            config.resolved_p(instance.variant), order);
      break;
    }
    case Variant::kPacking: {
      const PackingInstance& pi = instance.packing().core;
      std::uint64_t run_seed = derive_seed(common.seed, 0x72756e73ULL, 0);
      ContinuousGreedyConfig cg = config.cg_config(run_seed);
      record = config.known_parameters
                   ? run_packing_known(pi, cg, order, run_seed)
                   : run_packing(pi, cg, order, run_seed);
      break;
    }
  }
  emit(run_record_to_json(record).dump(2) + "\n", common.out_path);
  return kOk;
}

int cmd_estimate(const CommonOpts& common, const AlgoOpts& algo) {
  Instance instance = load_instance(common.instance_path);
  AlgoConfig config = algo.to_config();
  EstimateResult result =
      estimate_ratio(instance, config, common.trials, common.seed);
  Report report =
      make_report(instance, config, common.trials, common.seed, result);
  if (common.format == "csv") {
    emit(report_to_csv(report), common.out_path);
  } else {
    emit(report_to_json(report).dump(2) + "\n", common.out_path);
  }
  return kOk;
}

int cmd_bounds(const std::string& variant, const std::string& k_range,
               double alpha, const std::string& d_range, double capacity,
               bool known, int adjust_n, const CommonOpts& common) {
  std::vector<BoundReport> reports;
  if (variant == "k-secretary" || variant == "greedy-k-secretary") {
    auto [lo, hi] = parse_range(k_range);
    for (int k = lo; k <= hi; ++k) {
      reports.push_back(variant == "k-secretary"
                            ? bound_k_secretary(k, alpha)
                            : bound_greedy_k_secretary(k));
    }
  } else if (variant == "matching") {
    reports.push_back(bound_matching(alpha));
  } else if (variant == "packing") {
    auto [lo, hi] = parse_range(d_range);
    for (int d = lo; d <= hi; ++d) {
      reports.push_back(bound_packing(alpha, capacity, d, known));
    }
  } else {
    throw InputError("unknown bounds variant: " + variant);
  }

  std::ostringstream out;
  if (common.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BoundReport& b : reports) {
      nlohmann::ordered_json j;
      j["kind"] = b.kind;
      j["k"] = b.k;
      j["alpha"] = round_sig12(b.alpha);
      j["capacity_ratio"] = round_sig12(b.capacity_ratio);
      j["column_sparsity"] = b.column_sparsity;
      j["known_parameters"] = b.known_parameters;
      j["value"] = round_sig12(b.value);
      if (adjust_n > 0 && b.kind == "k-secretary") {
        j["n_adjusted_value"] =
            round_sig12(b.value - k_secretary_n_adjustment(b.k, adjust_n));
      }
      j["caveat"] = b.caveat;
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "kind,k,alpha,capacity_ratio,column_sparsity,known_parameters,"
           "value,n_adjusted_value,caveat\n";
    for (const BoundReport& b : reports) {
      out << b.kind << ',' << b.k << ',' << format_sig12(b.alpha) << ','
          << format_sig12(b.capacity_ratio) << ',' << b.column_sparsity << ','
          << (b.known_parameters ? 1 : 0) << ',' << format_sig12(b.value)
          << ',';
      if (adjust_n > 0 && b.kind == "k-secretary") {
        out << format_sig12(b.value - k_secretary_n_adjustment(b.k, adjust_n));
      }
      out << ',' << (b.caveat ? 1 : 0) << '\n';
    }
  } else {
    out << "kind                 k    alpha   B      d    value";
    if (adjust_n > 0) out << "      n-adjusted";
    out << "\n";
    for (const BoundReport& b : reports) {
      char k_col[16] = "-";
      if (b.k > 0) std::snprintf(k_col, sizeof(k_col), "%d", b.k);
      char ratio_col[16] = "-";
      if (b.capacity_ratio > 0.0) {
        std::snprintf(ratio_col, sizeof(ratio_col), "%.2f", b.capacity_ratio);
      }
      char d_col[16] = "-";
      if (b.column_sparsity > 0) {
        std::snprintf(d_col, sizeof(d_col), "%d", b.column_sparsity);
      }
      char line[160];
      std::snprintf(line, sizeof(line), "%-20s %-4s %-7.4f %-6s %-4s %s",
                    b.kind.c_str(), k_col, b.alpha, ratio_col, d_col,
                    format_fixed(b.value).c_str());
      out << line;
      if (adjust_n > 0 && b.kind == "k-secretary") {
        out << "    "
            << format_fixed(b.value - k_secretary_n_adjustment(b.k, adjust_n));
      }
      if (b.caveat) out << "  (constant-factor caveat)";
      out << "\n";
    }
  }
  emit(out.str(), common.out_path);
  return kOk;
}

int cmd_check(const CommonOpts& common, const AlgoOpts& algo,
              const std::string& mode_name, long audit_trials) {
  Instance instance = load_instance(common.instance_path);
  const ValueOracle* oracle = nullptr;
  switch (instance.variant) {
    case Variant::kCardinality:
      oracle = &instance.cardinality().oracle;
      break;
    case Variant::kMatching:
      oracle = &instance.matching().oracle;
      break;
    case Variant::kPacking:
      oracle = &instance.packing().core.oracle;
      break;
  }

  CheckMode mode;
  if (mode_name == "exhaustive") {
    mode = CheckMode::kExhaustive;
  } else if (mode_name == "randomized") {
    mode = CheckMode::kRandomized;
  } else {  // auto
    mode = oracle->ground_size() <= 12 ? CheckMode::kExhaustive
                                       : CheckMode::kRandomized;
  }

  std::ostringstream out;
  bool failed = false;
  auto describe = [&](const char* name, const PropertyReport& report) {
    out << name << ": " << (report.passed ? "pass" : "FAIL") << " ("
        << report.trials_checked << " checks)";
    if (!report.passed && report.witness) {
      const PropertyWitness& w = *report.witness;
      out << "  witness S={";
      for (std::size_t i = 0; i < w.s.size(); ++i) {
        out << (i ? "," : "") << w.s[i];
      }
      out << "} T={";
      for (std::size_t i = 0; i < w.t.size(); ++i) {
        out << (i ? "," : "") << w.t[i];
      }
      out << "} x=" << w.x << " lhs=" << format_sig12(w.lhs)
          << " rhs=" << format_sig12(w.rhs);
    }
    out << "\n";
    failed = failed || !report.passed;
  };
  describe("monotone",
           check_monotone(*oracle, mode, common.trials, common.seed));
  describe("submodular",
           check_submodular(*oracle, mode, common.trials, common.seed));

  if (audit_trials > 0 && instance.variant == Variant::kMatching) {
    EstimateResult result = estimate_ratio(instance, algo.to_config(),
                                           audit_trials, common.seed);
    RateAudit audit = check_matching_collision_rate(
        result.rates, instance.matching().l_size,
        algo.to_config().resolved_p(Variant::kMatching));
    out << "collision-rate audit: "
        << (audit.violations == 0 ? "pass" : "FAIL") << " ("
        << audit.rows.size() << " rounds, " << audit.violations
        << " violations)\n";
    failed = failed || audit.violations != 0;
  }
  if (audit_trials > 0 && instance.variant == Variant::kPacking) {
    const PackingInstance& pi = instance.packing().core;
    EstimateResult result = estimate_ratio(instance, algo.to_config(),
                                           audit_trials, common.seed);
    double ratio = pi.capacity_ratio();
    if (pi.column_sparsity() >= 1 && ratio > 1.0) {
      RateAudit audit =
          check_packing_feasible_rate(result.rates, pi.n(), pi.psi());
      out << "feasible-rate audit: "
          << (audit.violations == 0 ? "pass" : "FAIL") << " ("
          << audit.rows.size() << " rounds, " << audit.violations
          << " violations)\n";
      failed = failed || audit.violations != 0;
    }
  }

  emit(out.str(), common.out_path);
  return failed ? kCheckFailure : kOk;
}

int cmd_replay(const std::string& report_path, const std::string& out_path) {
  nlohmann::ordered_json loaded;
  try {
    loaded = nlohmann::ordered_json::parse(load_text(report_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("parse error in ") + report_path + ": " +
                          e.what());
  }
  Report report = report_from_json(loaded);
  EstimateResult result = estimate_ratio(report.instance, report.algo,
                                         report.trials, report.master_seed);
  nlohmann::ordered_json replayed = trial_stats_to_json(result.stats);
  nlohmann::ordered_json original = loaded.at("stats");
  std::ostringstream out;
  if (replayed == original) {
    out << "replay: identical TrialStats (" << result.stats.trials
        << " trials, mean_ratio=" << format_sig12(result.stats.mean_ratio)
        << ")\n";
    emit(out.str(), out_path);
    return kOk;
  }
  out << "replay: MISMATCH\n";
  for (auto it = original.begin(); it != original.end(); ++it) {
    if (!replayed.contains(it.key()) || replayed[it.key()] != it.value()) {
      out << "  field " << it.key() << ": report " << it.value().dump()
          << " vs replay "
          << (replayed.contains(it.key()) ? replayed[it.key()].dump()
                                          : std::string("<missing>"))
          << "\n";
    }
  }
  emit(out.str(), out_path);
  return kCheckFailure;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"Online monotone submodular maximization in random order: "
               "simulator, bound tables, and Monte Carlo harness"};
  app.require_subcommand(1);

  // gen
  GenParams gen_params;
  std::string gen_variant = "cardinality";
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--variant", gen_variant, "cardinality|matching|packing")
      ->check(CLI::IsMember({"cardinality", "matching", "packing"}));
  gen->add_option("--n", gen_params.n, "Items (or left vertices)");
  gen->add_option("--family", gen_params.family,
                  "coverage|modular|concave-sqrt|concave-cap");
  gen->add_option("--seed", gen_params.seed, "Generator seed");
  gen->add_option("--k", gen_params.k, "Cardinality budget");
  gen->add_option("--r-size", gen_params.r_size, "Right-side vertices");
  gen->add_option("--density", gen_params.edge_density, "Edge density");
  gen->add_option("--m", gen_params.m, "Packing constraints");
  gen->add_option("--capacity-ratio", gen_params.capacity_ratio,
                  "Target capacity ratio B");
  gen->add_option("--column-sparsity", gen_params.column_sparsity,
                  "Target column sparsity d");
  gen->add_flag("--declare", gen_params.declare_parameters,
                "Embed the declared (B, d) pair");
  gen->add_option("--out", gen_out, "Output path (stdout default)");

  // run / estimate / check share these
  CommonOpts run_common, est_common, check_common;
  AlgoOpts run_algo, est_algo, check_algo;

  CLI::App* run = app.add_subcommand("run", "One traced online run");
  run->add_option("--instance", run_common.instance_path, "Instance file")
      ->required();
  run->add_option("--seed", run_common.seed, "Order/rounding seed");
  run->add_option("--out", run_common.out_path, "Output path");
  add_algo_options(run, &run_algo);

  CLI::App* estimate =
      app.add_subcommand("estimate", "Monte Carlo competitive-ratio estimate");
  estimate->add_option("--instance", est_common.instance_path, "Instance file")
      ->required();
  estimate->add_option("--seed", est_common.seed, "Master seed");
  estimate->add_option("--trials", est_common.trials, "Trial count");
  estimate->add_option("--format", est_common.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  estimate->add_option("--out", est_common.out_path, "Output path");
  add_algo_options(estimate, &est_algo);

  // bounds
  std::string bounds_variant = "k-secretary";
  std::string bounds_k = "1..10";
  std::string bounds_d = "1..4";
  double bounds_alpha = 1.0;
  double bounds_capacity = 2.0;
  bool bounds_known = false;
  int bounds_n = 0;
  CommonOpts bounds_common;
  bounds_common.format = "table";
  CLI::App* bounds = app.add_subcommand("bounds", "Closed-form bound tables");
  bounds->add_option("--variant", bounds_variant,
                     "k-secretary|greedy-k-secretary|matching|packing");
  bounds->add_option("--k", bounds_k, "k or k range, e.g. 1..10");
  bounds->add_option("--alpha", bounds_alpha, "Offline approximation factor");
  bounds->add_option("--d", bounds_d, "Column sparsity or range");
  bounds->add_option("--capacity-ratio", bounds_capacity, "Capacity ratio B");
  bounds->add_flag("--known", bounds_known, "Known-(B, d) packing bound");
  bounds->add_option("--n", bounds_n,
                     "Also print the 6k^2/n adjusted k-secretary bound");
  bounds->add_option("--format", bounds_common.format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  bounds->add_option("--out", bounds_common.out_path, "Output path");

  // check
  std::string check_mode = "auto";
  long audit_trials = 0;
  check_common.trials = 10000;  // randomized checker default
  CLI::App* check =
      app.add_subcommand("check", "Oracle property checks and per-round rate audits");
  check->add_option("--instance", check_common.instance_path, "Instance file")
      ->required();
  check->add_option("--mode", check_mode, "auto|exhaustive|randomized")
      ->check(CLI::IsMember({"auto", "exhaustive", "randomized"}));
  check->add_option("--trials", check_common.trials,
                    "Randomized checker trials");
  check->add_option("--seed", check_common.seed, "Checker seed");
  check->add_option("--audit-trials", audit_trials,
                    "Monte Carlo runs for the per-round rate audits");
  check->add_option("--out", check_common.out_path, "Output path");
  add_algo_options(check, &check_algo);

  // replay
  std::string replay_path, replay_out;
  CLI::App* replay =
      app.add_subcommand("replay", "Re-execute a report and diff its stats");
  replay->add_option("--report", replay_path, "Report JSON file")->required();
  replay->add_option("--out", replay_out, "Output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gen->parsed()) {
      gen_params.variant = parse_variant(gen_variant);
      return cmd_gen(gen_params, gen_out);
    }
    if (run->parsed()) return cmd_run(run_common, run_algo);
    if (estimate->parsed()) return cmd_estimate(est_common, est_algo);
    if (bounds->parsed()) {
      return cmd_bounds(bounds_variant, bounds_k, bounds_alpha, bounds_d,
                        bounds_capacity, bounds_known, bounds_n,
                        bounds_common);
    }
    if (check->parsed()) {
      return cmd_check(check_common, check_algo, check_mode, audit_trials);
    }
    if (replay->parsed()) return cmd_replay(replay_path, replay_out);
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace subsec
