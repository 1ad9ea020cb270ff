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

#include "subsec/harness.hpp"

#include <algorithm>
#include <cmath>

#include "subsec/bounds.hpp"
#include "subsec/errors.hpp"
#include "subsec/rng.hpp"

namespace subsec {

namespace {

const double kInvE = 1.0 / std::exp(1.0);

GradientMode parse_gradient(const std::string& name) {
  if (name == "auto") return GradientMode::kAuto;
  if (name == "closed-form") return GradientMode::kClosedForm;
  if (name == "enum") return GradientMode::kEnum;
  if (name == "monte-carlo") return GradientMode::kMonteCarlo;
  throw InputError("unknown gradient mode: " + name);
}

bool weight_separable(OracleFamily family) {
  return family == OracleFamily::kModular ||
         family == OracleFamily::kConcaveSqrt ||
         family == OracleFamily::kConcaveCap;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double AlgoConfig::resolved_p(Variant variant) const {
  if (p) return *p;
  return variant == Variant::kMatching ? 0.5 : kInvE;
}

ContinuousGreedyConfig AlgoConfig::cg_config(std::uint64_t seed) const {
  ContinuousGreedyConfig cfg;
  cfg.steps = cg_steps;
  cfg.mc_samples = cg_samples;
  cfg.gradient = parse_gradient(cg_gradient);
  cfg.seed = seed;
  return cfg;
}

Benchmark offline_opt_benchmark(const Instance& instance,
                                const AlgoConfig& config) {
  Benchmark bench;
  switch (instance.variant) {
    case Variant::kCardinality: {
      const CardinalityInstance& ci = instance.cardinality();
      ItemSet all(ci.ground.n);
      for (int j = 0; j < ci.ground.n; ++j) all[j] = j;
      int limit = std::min(ci.k, ci.ground.n);
      if (count_subsets_up_to(ci.ground.n, limit, 2'000'000) <= 2'000'000) {
        bench.value = ci.oracle.eval(
            brute_force_cardinality(ci.oracle, all, ci.k));
        bench.kind = "integral-brute-force";
      } else if (weight_separable(ci.oracle.family())) {
        // Greedy picks the top-k weights, which is exact for these families.
        bench.value =
            ci.oracle.eval(greedy_cardinality(ci.oracle, all, ci.k));
        bench.kind = "integral-exact-topk";
      } else {
        throw BudgetError(
            "no offline benchmark affordable for this cardinality instance");
      }
      return bench;
    }
    case Variant::kMatching: {
      const MatchingInstance& mi = instance.matching();
      MatchingInput input = mi.input(mi.all_left());
      bench.value = mi.oracle.eval(brute_force_matching(input));
      bench.kind = "integral-brute-force";
      return bench;
    }
    case Variant::kPacking: {
      const PackingInstance& pi = instance.packing().core;
      std::vector<int> support(pi.n());
      for (int j = 0; j < pi.n(); ++j) support[j] = j;
      FractionalPoint x = continuous_greedy(
          pi.oracle, pi.polytope(1.0, support),
          config.cg_config(derive_seed(0x62656e63ULL, 0)));
      if (pi.oracle.has_closed_form_multilinear()) {
        bench.fractional_value = pi.oracle.multilinear_value(x.x);
      } else if (pi.n() <= 20) {
        bench.fractional_value = multilinear_exact(pi.oracle, x);
      } else {
        McEstimate mc = multilinear_mc(pi.oracle, x, 100000,
                                       derive_seed(0x62656e63ULL, 1));
        bench.fractional_value = mc.estimate;
      }
      if (pi.n() <= 12) {
        // Integral brute force over all feasible 0-1 allocations.
        double best = 0.0;
        std::uint64_t full = std::uint64_t{1} << pi.n();
        for (std::uint64_t mask = 0; mask < full; ++mask) {
          ItemSet s = mask_to_set(mask);
          bool feasible = true;
          for (int i = 0; i < pi.m() && feasible; ++i) {
            double load = 0.0;
            for (int j : s) load += pi.a[i][j];
            feasible = load <= pi.b[i] + 1e-12;
          }
          if (feasible) best = std::max(best, pi.oracle.eval_nocache(s));
        }
        bench.integral_value = best;
      }
      bench.value = *bench.fractional_value;
      bench.kind = "fractional-continuous-greedy";
      return bench;
    }
  }
  throw InputError("unknown instance variant");
}

EstimateResult estimate_ratio(const Instance& instance,
                              const AlgoConfig& config, long trials,
                              std::uint64_t master_seed) {
  int n = instance.ground_size();
  EstimateResult result;
  result.benchmark = offline_opt_benchmark(instance, config);
  result.rates.assign(n, RoundRates{});
  std::vector<long> accept_counts(n, 0);

  if (config.exhaustive && n > 8) {
    throw BudgetError("exhaustive order enumeration limited to n <= 8");
  }
  long total = config.exhaustive ? factorial(n) : trials;
  if (total < 1) throw InputError("estimate_ratio needs trials >= 1");

  CardinalitySolver cardinality_solver;
  MatchingSolver matching_solver;
  if (instance.variant == Variant::kCardinality) {
    cardinality_solver.k = instance.cardinality().k;
    cardinality_solver.kind = config.solver == "brute-force"
                                  ? CardinalitySolver::Kind::kBruteForce
                                  : CardinalitySolver::Kind::kGreedy;
  } else if (instance.variant == Variant::kMatching) {
    matching_solver.kind = config.solver == "brute-force"
                               ? MatchingSolver::Kind::kBruteForce
                               : MatchingSolver::Kind::kGreedy;
    matching_solver.cache_results = config.cache_offline_solver;
  }

  std::vector<int> lex_perm(n);
  for (int i = 0; i < n; ++i) lex_perm[i] = i;

  double mean = 0.0;
  double m2 = 0.0;
  for (long t = 0; t < total; ++t) {
    ArrivalOrder order = config.exhaustive
                             ? ArrivalOrder(lex_perm)
                             : ArrivalOrder::sample(
                                   n, derive_seed(master_seed, 0x6f726472ULL,
                                                  static_cast<std::uint64_t>(t)));
    RunRecord record;
    switch (instance.variant) {
      case Variant::kCardinality: {
        const CardinalityInstance& ci = instance.cardinality();
        record = run_k_secretary(ci.oracle, n, ci.k, cardinality_solver,
                                 config.resolved_p(instance.variant), order);
        break;
      }
      case Variant::kMatching: {
        const MatchingInstance& mi = instance.matching();
        record = run_matching(mi.oracle, mi.l_size, mi.r_size, mi.edges,
                              matching_solver,
                              config.resolved_p(instance.variant), order);
        break;
      }
      case Variant::kPacking: {
        const PackingInstance& pi = instance.packing().core;
        std::uint64_t run_seed = derive_seed(master_seed, 0x72756e73ULL,
                                             static_cast<std::uint64_t>(t));
        ContinuousGreedyConfig cg = config.cg_config(run_seed);
        record = config.known_parameters
                     ? run_packing_known(pi, cg, order, run_seed)
                     : run_packing(pi, cg, order, run_seed);
        break;
      }
    }
    for (const RoundEntry& entry : record.rounds) {
      RoundRates& rates = result.rates[entry.round - 1];
      if (entry.tentative) {
        ++rates.tentative;
        if (entry.feasible) ++rates.feasible;
      }
      if (entry.accepted) {
        ++rates.accepted;
        ++accept_counts[entry.round - 1];
      }
    }
    double ratio = result.benchmark.value <= 0.0
                       ? 1.0
                       : record.final_value / result.benchmark.value;
    double delta = ratio - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (ratio - mean);
    if (config.exhaustive) std::next_permutation(lex_perm.begin(),
                                                 lex_perm.end());
  }

  TrialStats& stats = result.stats;
  stats.trials = total;
  stats.mean_ratio = mean;
  if (total > 1) {
    double variance = std::max(0.0, m2 / static_cast<double>(total - 1));
    stats.std_err = std::sqrt(variance / static_cast<double>(total));
  }
  stats.ci_lo = stats.mean_ratio - 1.96 * stats.std_err;
  stats.ci_hi = stats.mean_ratio + 1.96 * stats.std_err;
  stats.per_round_acceptance_rate.resize(n);
  for (int r = 0; r < n; ++r) {
    stats.per_round_acceptance_rate[r] =
        static_cast<double>(accept_counts[r]) / static_cast<double>(total);
  }
  stats.opt_value = result.benchmark.value;
  stats.benchmark_kind = result.benchmark.kind;
  return result;
}

namespace {

double binomial_stderr(double rate, long count) {
  if (count <= 0) return 0.0;
  return std::sqrt(std::max(0.0, rate * (1.0 - rate)) /
                   static_cast<double>(count));
}

}  // namespace

RateAudit check_matching_collision_rate(const std::vector<RoundRates>& rates,
                                        int n, double p) {
  RateAudit audit;
  int first = sample_threshold(p, n);
  for (int round = first; round <= n; ++round) {
    const RoundRates& rr = rates[round - 1];
    if (rr.tentative == 0) continue;
    RateRow row;
    row.round = round;
    row.tentative = rr.tentative;
    row.rate = static_cast<double>(rr.feasible) /
               static_cast<double>(rr.tentative);
    row.std_err = binomial_stderr(row.rate, rr.tentative);
    row.threshold = round == 1
                        ? 1.0
                        : static_cast<double>(first - 1) / (round - 1);
    row.violated = row.rate + 3.0 * row.std_err < row.threshold;
    if (row.violated) ++audit.violations;
    audit.rows.push_back(row);
  }
  return audit;
}

RateAudit check_packing_feasible_rate(const std::vector<RoundRates>& rates,
                                      int n, double psi) {
  if (!(psi > 0.0)) throw InputError("psi must be positive");
  RateAudit audit;
  double last_round = static_cast<double>(n) / (4.0 * std::exp(1.0) * psi);
  for (int round = 1; round <= n && round <= last_round; ++round) {
    const RoundRates& rr = rates[round - 1];
    if (rr.tentative == 0) continue;
    RateRow row;
    row.round = round;
    row.tentative = rr.tentative;
    row.rate = static_cast<double>(rr.accepted) /
               static_cast<double>(rr.tentative);
    row.std_err = binomial_stderr(row.rate, rr.tentative);
    row.threshold = 0.5;
    row.violated = row.rate < row.threshold - 3.0 * row.std_err;
    if (row.violated) ++audit.violations;
    audit.rows.push_back(row);
  }
  return audit;
}

}  // namespace subsec
