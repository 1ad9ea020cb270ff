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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "subsec/bounds.hpp"
#include "subsec/errors.hpp"
#include "subsec/harness.hpp"
#include "subsec/instance.hpp"

using namespace subsec;

namespace {

const double kE = std::exp(1.0);

Instance modular_cardinality(std::vector<double> weights, int k) {
  Instance instance;
  instance.variant = Variant::kCardinality;
  int n = static_cast<int>(weights.size());
  instance.payload = CardinalityInstance{
      GroundSet(n), ValueOracle::modular(std::move(weights)), k};
  return instance;
}

Instance tiny_matching() {
  // |L| = 2, |R| = 1, edge values 1 and 5.
  Instance instance;
  instance.variant = Variant::kMatching;
  std::vector<Edge> edges{{0, 0}, {1, 0}};
  instance.payload = MatchingInstance{
      2, 1, edges, ValueOracle::edge_valued(ValueOracle::modular({1, 5}))};
  return instance;
}

}  // namespace

TEST_CASE("exhaustive estimate on the three-item instance is exact") {
  Instance instance = modular_cardinality({1, 3, 2}, 1);
  AlgoConfig config;
  config.exhaustive = true;
  EstimateResult result = estimate_ratio(instance, config, 0, 0);
  CHECK(result.stats.trials == 6);
  CHECK(result.benchmark.value == 3.0);
  CHECK(result.stats.mean_ratio == doctest::Approx(11.0 / 18.0));
  CHECK(result.stats.benchmark_kind == "integral-brute-force");
}

TEST_CASE("degenerate all-zero objective defines ratio one") {
  Instance instance = modular_cardinality({0, 0, 0}, 1);
  AlgoConfig config;
  config.exhaustive = true;
  EstimateResult result = estimate_ratio(instance, config, 0, 0);
  CHECK(result.benchmark.value == 0.0);
  CHECK(result.stats.mean_ratio == 1.0);
  CHECK(result.stats.std_err == 0.0);
}

TEST_CASE("exhaustive matching estimate matches the hand computation") {
  Instance instance = tiny_matching();
  AlgoConfig config;
  config.exhaustive = true;
  config.solver = "brute-force";
  EstimateResult result = estimate_ratio(instance, config, 0, 0);
  CHECK(result.stats.trials == 2);
  CHECK(result.benchmark.value == 5.0);
  CHECK(result.stats.mean_ratio == doctest::Approx(3.0 / 5.0));
}

TEST_CASE("sampled estimates agree with exhaustive within three sigma") {
  GenParams params;
  params.variant = Variant::kCardinality;
  params.n = 6;
  params.k = 2;
  params.family = "coverage";
  params.seed = 1200;
  Instance instance = gen_instance(params);
  AlgoConfig exhaustive;
  exhaustive.exhaustive = true;
  EstimateResult exact = estimate_ratio(instance, exhaustive, 0, 0);
  AlgoConfig sampled;
  EstimateResult mc = estimate_ratio(instance, sampled, 10000, 777);
  CHECK(std::abs(mc.stats.mean_ratio - exact.stats.mean_ratio) <=
        3.0 * mc.stats.std_err);
}

TEST_CASE("ratios never exceed one against exact integral benchmarks") {
  for (int trial = 0; trial < 6; ++trial) {
    GenParams params;
    params.variant = trial % 2 == 0 ? Variant::kCardinality
                                    : Variant::kMatching;
    params.n = params.variant == Variant::kCardinality ? 9 : 5;
    params.k = 3;
    params.r_size = 3;
    params.family = trial % 3 == 0 ? "coverage" : "concave-sqrt";
    if (params.variant == Variant::kMatching) params.family = "coverage";
    params.seed = 4000 + trial;
    Instance instance = gen_instance(params);
    AlgoConfig config;
    config.solver = "brute-force";
    EstimateResult result = estimate_ratio(instance, config, 300,
                                           6000 + trial);
    CHECK(result.stats.mean_ratio <= 1.0 + 1e-9);
    CHECK(result.stats.mean_ratio >= 0.0);
    CHECK(result.stats.ci_hi ==
          doctest::Approx(result.stats.mean_ratio +
                          1.96 * result.stats.std_err));
  }
}

TEST_CASE("estimate is replay deterministic") {
  GenParams params;
  params.variant = Variant::kCardinality;
  params.n = 10;
  params.k = 2;
  params.family = "coverage";
  params.seed = 55;
  Instance instance = gen_instance(params);
  AlgoConfig config;
  EstimateResult a = estimate_ratio(instance, config, 500, 42);
  EstimateResult b = estimate_ratio(instance, config, 500, 42);
  CHECK(a.stats.mean_ratio == b.stats.mean_ratio);
  CHECK(a.stats.std_err == b.stats.std_err);
  CHECK(a.stats.per_round_acceptance_rate ==
        b.stats.per_round_acceptance_rate);
  EstimateResult c = estimate_ratio(instance, config, 500, 43);
  CHECK(a.stats.mean_ratio != c.stats.mean_ratio);
}

TEST_CASE("bound_k_secretary values") {
  CHECK(bound_k_secretary(1, 1.0).value ==
        doctest::Approx(1.0 / kE).epsilon(1e-12));
  CHECK(bound_k_secretary(2, 1.0).value ==
        doctest::Approx(0.3190).epsilon(2e-3));
  CHECK(std::abs(bound_k_secretary(2, 1.0).value - 0.3190) < 5e-4);
  // Large-k limit reaches alpha/e.
  CHECK(std::abs(bound_k_secretary(1000000, 1.0).value - 1.0 / kE) < 1e-3);
  // At least 0.31 alpha for every k >= 2.
  double worst = 1.0;
  for (int k = 2; k <= 1000; ++k) {
    worst = std::min(worst, bound_k_secretary(k, 1.0).value);
  }
  CHECK(worst >= 0.31);
  // Scales linearly in alpha.
  CHECK(bound_k_secretary(4, 0.5).value ==
        doctest::Approx(0.5 * bound_k_secretary(4, 1.0).value));
  CHECK_THROWS_AS(bound_k_secretary(0, 1.0), InputError);
}

TEST_CASE("bound_greedy_k_secretary values") {
  // Asymptotic value 0.275 for large k.
  CHECK(std::abs(bound_greedy_k_secretary(1000000).value - 0.275) < 1e-3);
  // Minimum over k >= 2 stays above the quoted 0.177.
  double worst = 1.0;
  for (int k = 2; k <= 1000; ++k) {
    worst = std::min(worst, bound_greedy_k_secretary(k).value);
  }
  CHECK(worst >= 0.177);
  CHECK(bound_greedy_k_secretary(2).value >= 0.177);
  // Greedy guarantee never beats the exact-solver guarantee.
  for (int k = 1; k <= 50; ++k) {
    CHECK(bound_greedy_k_secretary(k).value <=
          bound_k_secretary(k, 1.0).value + 1e-12);
  }
}

TEST_CASE("bound_matching values") {
  CHECK(bound_matching(1.0).value == 0.25);
  // Exact rational identity for the greedy solver factor.
  CHECK(bound_matching(1.0 / 3.0).value == 1.0 / 12.0);
  CHECK(bound_matching(0.0).value == 0.0);
  CHECK_FALSE(bound_matching(1.0).caveat);
}

TEST_CASE("bound_packing exponent factors") {
  BoundReport known = bound_packing(1.0, 2.0, 4, true);
  CHECK(known.value == doctest::Approx(0.25));  // 4^-1
  CHECK(known.caveat);
  BoundReport unknown = bound_packing(1.0, 3.0, 4, false);
  CHECK(unknown.value == doctest::Approx(0.25));  // 4^(-2/2)
  CHECK(unknown.caveat);
  CHECK(bound_packing(1.0, 2.0, 1, true).value == doctest::Approx(1.0));
  CHECK(bound_packing(1.0, 2.0, 1, false).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(bound_packing(1.0, 1.5, 2, true), InputError);
}

TEST_CASE("greedy_stage_alpha") {
  CHECK(greedy_stage_alpha(100.0, 100.0, 1e12) ==
        doctest::Approx(1.0 - 1.0 / kE).epsilon(1e-9));
  CHECK(greedy_stage_alpha(100.0 / kE, 100.0, 1.0) ==
        doctest::Approx(1.0 - 1.0 / (kE * kE) - 1.0 / kE).epsilon(1e-12));
  CHECK(greedy_stage_alpha(100.0 / kE, 100.0, 1.0) ==
        doctest::Approx(0.4967).epsilon(1e-4));
  // Monotone decreasing in l.
  for (int l = 1; l < 50; ++l) {
    CHECK(greedy_stage_alpha(l + 1, 50.0, 3.0) <
          greedy_stage_alpha(l, 50.0, 3.0));
  }
}

TEST_CASE("n adjustment") {
  CHECK(k_secretary_n_adjustment(2, 200) == doctest::Approx(24.0 / 200.0));
  CHECK(k_secretary_n_adjustment(5, 200) == doctest::Approx(0.75));
}

TEST_CASE("collision rate audit thresholds") {
  int n = 12;
  std::vector<RoundRates> rates(n);
  // Healthy table: feasibility counts proportional to the lemma bound.
  for (int round = 6; round <= n; ++round) {
    RoundRates& rr = rates[round - 1];
    rr.tentative = 500;
    double bound = 5.0 / (round - 1);
    rr.feasible = static_cast<long>(std::ceil(bound * 500.0));
    rr.accepted = rr.feasible;
  }
  RateAudit audit = check_matching_collision_rate(rates, n, 0.5);
  CHECK(audit.violations == 0);
  REQUIRE_FALSE(audit.rows.empty());
  CHECK(audit.rows.front().round == 6);
  CHECK(audit.rows.front().threshold == doctest::Approx(1.0));
  CHECK(audit.rows.back().threshold == doctest::Approx(5.0 / 11.0));

  // A clearly broken round trips the audit.
  rates[9].feasible = 0;
  rates[9].accepted = 0;
  RateAudit bad = check_matching_collision_rate(rates, n, 0.5);
  CHECK(bad.violations >= 1);
}

TEST_CASE("collision audit passes on real matching runs") {
  GenParams params;
  params.variant = Variant::kMatching;
  params.n = 8;
  params.r_size = 4;
  params.seed = 2500;
  Instance instance = gen_instance(params);
  AlgoConfig config;
  config.solver = "brute-force";
  EstimateResult result = estimate_ratio(instance, config, 2000, 321);
  RateAudit audit = check_matching_collision_rate(result.rates, 8, 0.5);
  CHECK(audit.violations == 0);
  CHECK_FALSE(audit.rows.empty());
}

TEST_CASE("packing feasible-rate audit") {
  // psi = 2, n = 100: audited rounds are l <= 100/(8e) ~ 4.59.
  std::vector<RoundRates> rates(100);
  for (int round = 1; round <= 4; ++round) {
    rates[round - 1].tentative = 40;
    rates[round - 1].accepted = 40;
    rates[round - 1].feasible = 40;
  }
  RateAudit healthy = check_packing_feasible_rate(rates, 100, 2.0);
  CHECK(healthy.violations == 0);
  CHECK(healthy.rows.size() == 4);
  CHECK(healthy.rows.back().round == 4);

  rates[1].accepted = 2;  // rate 0.05 with 40 tentative: clear violation
  RateAudit broken = check_packing_feasible_rate(rates, 100, 2.0);
  CHECK(broken.violations == 1);
}

TEST_CASE("offline benchmark examples") {
  Instance instance = modular_cardinality({5, 3, 2}, 2);
  AlgoConfig config;
  Benchmark bench = offline_opt_benchmark(instance, config);
  CHECK(bench.value == 8.0);
  CHECK(bench.kind == "integral-brute-force");

  // 2x2 matching with values [[3,1],[1,3]].
  Instance matching;
  matching.variant = Variant::kMatching;
  std::vector<Edge> edges{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  matching.payload = MatchingInstance{
      2, 2, edges,
      ValueOracle::edge_valued(ValueOracle::modular({3, 1, 1, 3}))};
  CHECK(offline_opt_benchmark(matching, config).value == 6.0);
}

TEST_CASE("top-k benchmark kicks in beyond the enumeration budget") {
  std::vector<double> weights(200);
  for (int i = 0; i < 200; ++i) weights[i] = 1.0 + (i % 17) * 0.25;
  Instance instance = modular_cardinality(weights, 5);
  AlgoConfig config;
  Benchmark bench = offline_opt_benchmark(instance, config);
  CHECK(bench.kind == "integral-exact-topk");
  // Independent check: sum of the five largest weights.
  std::vector<double> sorted = weights;
  std::sort(sorted.rbegin(), sorted.rend());
  double expected = sorted[0] + sorted[1] + sorted[2] + sorted[3] + sorted[4];
  CHECK(bench.value == doctest::Approx(expected));
}

TEST_CASE("benchmark budget error when nothing affordable") {
  // Coverage is not weight separable, so a large (n, k) has no affordable
  // exact benchmark.
  Instance instance;
  instance.variant = Variant::kCardinality;
  instance.payload = CardinalityInstance{
      GroundSet(40), gen_oracle("coverage", 40, 123), 12};
  AlgoConfig config;
  CHECK_THROWS_AS(offline_opt_benchmark(instance, config), BudgetError);
  CHECK_THROWS_AS(estimate_ratio(instance, config, 10, 1), BudgetError);
}

TEST_CASE("packing benchmark records both values") {
  GenParams params;
  params.variant = Variant::kPacking;
  params.n = 9;
  params.m = 3;
  params.capacity_ratio = 2.0;
  params.column_sparsity = 2;
  params.family = "coverage";
  params.seed = 3100;
  Instance instance = gen_instance(params);
  AlgoConfig config;
  config.cg_steps = 100;
  Benchmark bench = offline_opt_benchmark(instance, config);
  CHECK(bench.kind == "fractional-continuous-greedy");
  REQUIRE(bench.integral_value.has_value());
  REQUIRE(bench.fractional_value.has_value());
  // Continuous greedy on the full polytope cannot fall far below the
  // integral optimum (which is itself feasible for the relaxation).
  CHECK(*bench.integral_value <=
        *bench.fractional_value / (1.0 - 1.0 / kE - 0.05) + 1e-9);
}

TEST_CASE("known-parameter packing estimate goes through the harness") {
  GenParams params;
  params.variant = Variant::kPacking;
  params.n = 30;
  params.m = 3;
  params.capacity_ratio = 2.0;
  params.column_sparsity = 2;
  params.family = "coverage";
  params.seed = 3300;
  params.declare_parameters = true;
  Instance instance = gen_instance(params);
  AlgoConfig config;
  config.known_parameters = true;
  config.cg_steps = 20;
  EstimateResult result = estimate_ratio(instance, config, 100, 888);
  // p ~ 0.954: nothing before round ceil(p n) = 29 can be tentative.
  double p = packing_sample_fraction(2.0, 2);
  int first = sample_threshold(p, 30);
  for (int round = 1; round < first; ++round) {
    CHECK(result.rates[round - 1].tentative == 0);
  }
  CHECK(result.stats.trials == 100);
}

TEST_CASE("packing estimate audits cleanly") {
  GenParams params;
  params.variant = Variant::kPacking;
  params.n = 12;
  params.m = 3;
  params.capacity_ratio = 2.0;
  params.column_sparsity = 2;
  params.family = "coverage";
  params.seed = 3200;
  Instance instance = gen_instance(params);
  AlgoConfig config;
  config.cg_steps = 30;
  EstimateResult result = estimate_ratio(instance, config, 300, 777);
  const PackingInstance& pi = instance.packing().core;
  RateAudit audit =
      check_packing_feasible_rate(result.rates, pi.n(), pi.psi());
  CHECK(audit.violations == 0);
  CHECK(result.stats.mean_ratio > 0.0);
}
