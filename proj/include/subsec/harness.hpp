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

#ifndef SUBSEC_HARNESS_HPP_
#define SUBSEC_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsec/instance.hpp"
#include "subsec/online.hpp"

namespace subsec {

// Monte Carlo summary over seeded trials of one online algorithm against a
// fixed offline benchmark.
struct TrialStats {
  long trials = 0;
  double mean_ratio = 0.0;
  double std_err = 0.0;
  double ci_lo = 0.0;  // mean - 1.96 se
  double ci_hi = 0.0;  // mean + 1.96 se
  std::vector<double> per_round_acceptance_rate;  // index round-1
  double opt_value = 0.0;
  std::string benchmark_kind;
};

// Pooled per-round counters across trials.
struct RoundRates {
  long tentative = 0;
  long feasible = 0;
  long accepted = 0;
};

struct AlgoConfig {
  // "greedy" or "brute-force"; cardinality also accepts either (greedy is
  // exact for modular and concave-over-modular objectives).
  std::string solver = "greedy";
  // Sample fraction; unset picks the variant default (1/e for k-secretary,
  // 1/2 for matching). Packing ignores it (the known variant derives its
  // own fraction from B and d).
  std::optional<double> p;
  bool known_parameters = false;  // packing sampling phase from (B, d)
  int cg_steps = 100;
  int cg_samples = 1000;
  std::string cg_gradient = "auto";  // auto|closed-form|enum|monte-carlo
  bool exhaustive = false;  // enumerate all n! arrival orders (n <= 8)
  bool cache_offline_solver = true;  // matching-only result cache

  double resolved_p(Variant variant) const;
  ContinuousGreedyConfig cg_config(std::uint64_t seed) const;
};

struct Benchmark {
  double value = 0.0;  // denominator used for ratios
  std::string kind;    // integral-brute-force | integral-exact-topk |
                       // fractional-continuous-greedy
  std::optional<double> integral_value;    // packing, n <= 12
  std::optional<double> fractional_value;  // packing
};

// Exact offline optimum where affordable: brute force for cardinality and
// matching, exact top-k for weight-separable cardinality objectives;
// packing records the fractional continuous-greedy benchmark (always) and
// the integral brute force when n <= 12, ratios using the fractional one.
Benchmark offline_opt_benchmark(const Instance& instance,
                                const AlgoConfig& config);

struct EstimateResult {
  TrialStats stats;
  std::vector<RoundRates> rates;  // per round, length n
  Benchmark benchmark;
};

// Runs `trials` seeded arrival orders (Fisher-Yates from the master seed;
// exhaustive mode enumerates all n! orders when n <= 8) and aggregates
// ratio statistics against the benchmark. OPT = 0 defines every ratio as 1.
EstimateResult estimate_ratio(const Instance& instance,
                              const AlgoConfig& config, long trials,
                              std::uint64_t master_seed);

// One audited row of an empirical-rate-versus-threshold comparison.
struct RateRow {
  int round = 0;
  double threshold = 0.0;
  double rate = 0.0;
  double std_err = 0.0;
  long tentative = 0;
  bool violated = false;
};

struct RateAudit {
  std::vector<RateRow> rows;
  long violations = 0;
};

// Tentative-edge feasibility per round versus (ceil(p n) - 1) / (l - 1);
// a round violates when rate + 3 se falls below the threshold.
RateAudit check_matching_collision_rate(const std::vector<RoundRates>& rates,
                                        int n, double p);

// Packing acceptance rate per round l <= n / (4 e psi) versus 1/2 - 3 se.
RateAudit check_packing_feasible_rate(const std::vector<RoundRates>& rates,
                                      int n, double psi);

}  // namespace subsec

#endif  // SUBSEC_HARNESS_HPP_
