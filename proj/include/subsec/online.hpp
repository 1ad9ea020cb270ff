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

#ifndef SUBSEC_ONLINE_HPP_
#define SUBSEC_ONLINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsec/offline.hpp"
#include "subsec/oracle.hpp"

namespace subsec {

// One uniformly random arrival order: perm[t] is the item arriving in round
// t+1. Must be a bijection on 0..n-1.
struct ArrivalOrder {
  std::vector<int> perm;

  explicit ArrivalOrder(std::vector<int> p);
  int size() const { return static_cast<int>(perm.size()); }
  static ArrivalOrder sample(int n, std::uint64_t seed);
};

enum class Variant { kCardinality, kMatching, kPacking };

std::string variant_name(Variant v);

struct RoundEntry {
  int round = 0;  // 1-based
  int item = -1;  // arriving item / left vertex
  bool solver_ran = false;
  bool tentative = false;
  bool feasible = false;  // feasibility-test outcome, meaningful if tentative
  bool accepted = false;
  std::vector<int> offline_solution;  // S^(l) items, or M^(l) edge indices
  std::vector<double> fractional;     // packing: the round's fractional point
};

struct RunRecord {
  Variant variant = Variant::kCardinality;
  std::uint64_t seed = 0;  // rounding seed; unused for deterministic variants
  int sample_size = 0;     // first decision round, ceil(p*n)
  std::vector<RoundEntry> rounds;
  std::vector<int> final_selection;   // items or edge indices
  std::vector<std::uint8_t> final_x;  // packing 0-1 allocation
  double final_value = 0.0;
  std::string warning;  // e.g. capacity-ratio regime notes
};

// Sample threshold ceil(p*n): decision rounds are l >= ceil(p*n), the first
// ceil(p*n) - 1 arrivals are observed only.
int sample_threshold(double p, int n);

// Algorithm: drop the first ceil(p*n)-1 items; afterwards solve the offline
// problem on everything seen and accept the arriving item when the offline
// solution contains it and fewer than k items are accepted.
RunRecord run_k_secretary(const ValueOracle& oracle, int n, int k,
                          const CardinalitySolver& solver, double p,
                          const ArrivalOrder& order);

// Matching counterpart with sample fraction p (1/2 in the analysis): accept
// the tentative edge of the arriving vertex when it stays a matching.
RunRecord run_matching(const ValueOracle& edge_oracle, int l_size, int r_size,
                       const std::vector<Edge>& edges,
                       const MatchingSolver& solver, double p,
                       const ArrivalOrder& order);

// Linear packing instance: maximize v over 0-1 allocations with A x <= b.
struct PackingInstance {
  GroundSet ground;
  ValueOracle oracle;
  std::vector<std::vector<double>> a;  // m x n, entries >= 0
  std::vector<double> b;               // m, positive

  PackingInstance(GroundSet g, ValueOracle o,
                  std::vector<std::vector<double>> a_in,
                  std::vector<double> b_in);

  int n() const { return ground.n; }
  int m() const { return static_cast<int>(a.size()); }

  // B = min_i b_i / max_j a_ij over rows with a positive entry; +inf when
  // the matrix is all zero.
  double capacity_ratio() const;
  // d = max number of nonzero entries in a column.
  int column_sparsity() const;
  // psi = d^(1/(B-1)); requires d >= 1 and B > 1.
  double psi() const;

  PackingPolytope polytope(double scale, std::vector<int> support) const;
};

// Each round solves the scaled polytope P(l/n, S) on the revealed items,
// rounds the arriving coordinate to 1 with probability x~_j using the
// round's own substream of `seed`, and accepts if A(x + e_j) <= b. The
// prefix allocation satisfies A x <= b after every round.
RunRecord run_packing(const PackingInstance& instance,
                      const ContinuousGreedyConfig& solver_config,
                      const ArrivalOrder& order, std::uint64_t seed);

// Fraction p = 1 - (1/(2e)) * (1/(2d))^(1/(B-1)) of the sequence observed
// before any tentative selection, for known capacity ratio B and column
// sparsity d.
double packing_sample_fraction(double capacity_ratio, int column_sparsity);

// run_packing with the known-(B, d) sampling phase. B < 2 records a regime
// warning but the run proceeds.
RunRecord run_packing_known(const PackingInstance& instance,
                            const ContinuousGreedyConfig& solver_config,
                            const ArrivalOrder& order, std::uint64_t seed);

}  // namespace subsec

#endif  // SUBSEC_ONLINE_HPP_
