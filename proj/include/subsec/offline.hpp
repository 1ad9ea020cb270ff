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

#ifndef SUBSEC_OFFLINE_HPP_
#define SUBSEC_OFFLINE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "subsec/lp.hpp"
#include "subsec/oracle.hpp"
#include "subsec/set_util.hpp"

namespace subsec {

// ---------------------------------------------------------------------------
// Cardinality-constrained solvers.
//
// Both are deterministic functions of the unordered input set: the input is
// canonicalized before any iteration and all ties break toward the
// lexicographically smallest sorted index list.
// ---------------------------------------------------------------------------

// argmax over T subset of L, |T| <= k. Enumeration budget: at most 2e6
// candidate subsets, else BudgetError.
ItemSet brute_force_cardinality(const ValueOracle& oracle, const ItemSet& l,
                                int k);

// Nemhauser-Wolsey greedy: k passes, each adding the maximum-marginal item
// (smallest index on ties). Zero-gain items are still added, so the output
// has exactly min(k, |L|) items.
ItemSet greedy_cardinality(const ValueOracle& oracle, const ItemSet& l, int k);

struct CardinalitySolver {
  enum class Kind { kBruteForce, kGreedy };
  Kind kind = Kind::kGreedy;
  int k = 1;

  ItemSet solve(const ValueOracle& oracle, const ItemSet& l) const;
};

// Runs greedy for k picks, brute-forces the best subset of size <= k_prime,
// and evaluates the stage bound 1 - exp(-k / k').
struct StageGuarantee {
  double greedy_value = 0.0;
  double opt_kprime_value = 0.0;
  double bound = 0.0;
  bool holds = false;
};
StageGuarantee greedy_stage_guarantee_check(const ValueOracle& oracle,
                                            const ItemSet& l, int k,
                                            int k_prime);

// ---------------------------------------------------------------------------
// Bipartite matching solvers. Edges carry an index into the instance edge
// list; the value oracle is defined on sets of edge indices.
// ---------------------------------------------------------------------------

struct Edge {
  int l = 0;
  int r = 0;
};

// Solver input: the revealed part of the bipartite graph. Edges whose left
// endpoint is not revealed are ignored. The edge list must be sorted by
// (l, r); edge indices refer to positions in that list.
struct MatchingInput {
  int l_size = 0;
  int r_size = 0;
  const std::vector<Edge>* edges = nullptr;
  const ValueOracle* oracle = nullptr;  // over edge indices
  ItemSet revealed_l;                   // canonical

  MatchingInput(int l_size, int r_size, const std::vector<Edge>& edges,
                const ValueOracle& oracle, ItemSet revealed);
};

// Greedy: repeatedly add the maximum-marginal non-conflicting edge while a
// strictly positive gain exists. Ties break on (l, r). Returns sorted edge
// indices, always a matching.
std::vector<int> greedy_matching(const MatchingInput& input);

// Exact argmax over all matchings of the revealed subgraph; ties break
// toward the lexicographically smallest sorted edge list. BudgetError if
// the number of matchings exceeds 2e6.
std::vector<int> brute_force_matching(const MatchingInput& input);

// Number of matchings in the revealed subgraph, saturating at cap+1.
std::uint64_t count_matchings(const MatchingInput& input, std::uint64_t cap);

struct MatchingSolver {
  enum class Kind { kBruteForce, kGreedy };
  Kind kind = Kind::kGreedy;
  // Results keyed by revealed set; sound because solvers are functions of
  // the unordered revealed set. Shared across the trials of one experiment.
  bool cache_results = false;

  std::vector<int> solve(const MatchingInput& input) const;

 private:
  mutable std::unordered_map<ItemSet, std::vector<int>, ItemSetHash> cache_;
};

// ---------------------------------------------------------------------------
// Continuous greedy over a packing polytope.
// ---------------------------------------------------------------------------

enum class GradientMode {
  kAuto,        // closed form if the family has one, else enum if n <= 20,
                // else Monte Carlo
  kClosedForm,  // family closed form (InputError if unavailable)
  kEnum,        // exact enumeration, n <= 20
  kMonteCarlo,  // sampled, mc_samples sets per step shared across coordinates
};

struct ContinuousGreedyConfig {
  int steps = 100;
  int mc_samples = 1000;
  GradientMode gradient = GradientMode::kAuto;
  std::uint64_t seed = 0;
};

// Discretized continuous greedy: x(0) = 0; each step moves x by (1/steps)
// times the lp_maximize direction for the coordinate weights
// F(x or 1_j) - F(x). The result is feasible for the polytope by convexity.
FractionalPoint continuous_greedy(const ValueOracle& oracle,
                                  const PackingPolytope& polytope,
                                  const ContinuousGreedyConfig& config);

}  // namespace subsec

#endif  // SUBSEC_OFFLINE_HPP_
