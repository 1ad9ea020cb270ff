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

#include "subsec/offline.hpp"

#include <algorithm>
#include <cmath>

#include "subsec/errors.hpp"
#include "subsec/rng.hpp"

namespace subsec {

namespace {
constexpr std::uint64_t kEnumerationBudget = 2'000'000;
}

ItemSet brute_force_cardinality(const ValueOracle& oracle, const ItemSet& l,
                                int k) {
  if (k < 0) throw InputError("cardinality budget k must be >= 0");
  ItemSet pool = canonicalize(l);
  int limit = std::min<int>(k, pool.size());
  if (count_subsets_up_to(static_cast<int>(pool.size()), limit,
                          kEnumerationBudget) > kEnumerationBudget) {
    throw BudgetError("brute_force_cardinality: more than 2e6 candidates");
  }

  ItemSet best;  // empty set, value v(empty) = 0
  double best_value = oracle.eval({});
  ItemSet candidate;
  // Combinations of each size in lexicographic order.
  std::vector<int> idx;
  for (int size = 1; size <= limit; ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      candidate.clear();
      for (int i : idx) candidate.push_back(pool[i]);
      double value = oracle.eval(candidate);
      if (value > best_value ||
          (value == best_value &&
           std::lexicographical_compare(candidate.begin(), candidate.end(),
                                        best.begin(), best.end()))) {
        best_value = value;
        best = candidate;
      }
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == static_cast<int>(pool.size()) - size + pos)
        --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return best;
}

ItemSet greedy_cardinality(const ValueOracle& oracle, const ItemSet& l,
                           int k) {
  if (k < 0) throw InputError("cardinality budget k must be >= 0");
  ItemSet pool = canonicalize(l);
  ItemSet chosen;
  std::vector<char> taken(pool.size(), 0);
  std::vector<double> gains;
  int picks = std::min<int>(k, pool.size());
  for (int round = 0; round < picks; ++round) {
    oracle.marginals_over_set(chosen, pool, &gains);
    int best = -1;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      if (best < 0 || gains[i] > gains[best]) best = static_cast<int>(i);
    }
    taken[best] = 1;
    chosen = set_with(chosen, pool[best]);
  }
  return chosen;
}

ItemSet CardinalitySolver::solve(const ValueOracle& oracle,
                                 const ItemSet& l) const {
  switch (kind) {
    case Kind::kBruteForce:
      return brute_force_cardinality(oracle, l, k);
    case Kind::kGreedy:
      return greedy_cardinality(oracle, l, k);
  }
  return {};
}

StageGuarantee greedy_stage_guarantee_check(const ValueOracle& oracle,
                                            const ItemSet& l, int k,
                                            int k_prime) {
  if (k_prime < 1 || k < 1) {
    throw InputError("stage guarantee needs k >= 1 and k' >= 1");
  }
  StageGuarantee out;
  out.greedy_value = oracle.eval(greedy_cardinality(oracle, l, k));
  out.opt_kprime_value =
      oracle.eval(brute_force_cardinality(oracle, l, k_prime));
  out.bound = 1.0 - std::exp(-static_cast<double>(k) / k_prime);
  out.holds = out.greedy_value >= out.bound * out.opt_kprime_value - 1e-9;
  return out;
}

MatchingInput::MatchingInput(int l_size_in, int r_size_in,
                             const std::vector<Edge>& edge_list,
                             const ValueOracle& oracle_in, ItemSet revealed)
    : l_size(l_size_in),
      r_size(r_size_in),
      edges(&edge_list),
      oracle(&oracle_in),
      revealed_l(canonicalize(std::move(revealed))) {
  if (oracle_in.ground_size() != static_cast<int>(edge_list.size())) {
    throw InputError("matching oracle must be defined over the edge list");
  }
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const Edge& e = edge_list[i];
    if (e.l < 0 || e.l >= l_size || e.r < 0 || e.r >= r_size) {
      throw InputError("matching edge endpoint out of range");
    }
    if (i + 1 < edge_list.size()) {
      const Edge& next = edge_list[i + 1];
      if (next.l < e.l || (next.l == e.l && next.r <= e.r)) {
        throw InputError("matching edge list must be sorted by (l, r)");
      }
    }
  }
  if (!revealed_l.empty() &&
      (revealed_l.front() < 0 || revealed_l.back() >= l_size)) {
    throw InputError("revealed vertex out of range");
  }
}

std::vector<int> greedy_matching(const MatchingInput& input) {
  const std::vector<Edge>& edges = *input.edges;
  std::vector<int> available;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (set_contains(input.revealed_l, edges[i].l)) {
      available.push_back(static_cast<int>(i));
    }
  }
  std::vector<char> l_used(input.l_size, 0), r_used(input.r_size, 0);
  std::vector<int> chosen;
  std::vector<double> gains;
  for (;;) {
    input.oracle->marginals_over_set(chosen, available, &gains);
    int best = -1;
    for (std::size_t i = 0; i < available.size(); ++i) {
      const Edge& e = edges[available[i]];
      if (l_used[e.l] || r_used[e.r]) continue;
      if (gains[i] <= 0.0) continue;
      if (best < 0 || gains[i] > gains[best]) best = static_cast<int>(i);
    }
    if (best < 0) break;
    const Edge& e = edges[available[best]];
    l_used[e.l] = 1;
    r_used[e.r] = 1;
    chosen.push_back(available[best]);
    std::sort(chosen.begin(), chosen.end());
  }
  return chosen;
}

namespace {

// Recursive enumeration over the revealed left vertices: each is either
// skipped or matched to a free right neighbor. Visits every matching once.
struct MatchingEnumerator {
  const MatchingInput& input;
  const std::vector<Edge>& edges;
  std::vector<std::vector<int>> incident;  // per revealed position
  std::vector<char> r_used;
  std::vector<int> current;
  std::vector<int> best;
  double best_value = 0.0;

  explicit MatchingEnumerator(const MatchingInput& in)
      : input(in), edges(*in.edges), r_used(in.r_size, 0) {
    incident.resize(input.revealed_l.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto it = std::lower_bound(input.revealed_l.begin(),
                                 input.revealed_l.end(), edges[i].l);
      if (it != input.revealed_l.end() && *it == edges[i].l) {
        incident[it - input.revealed_l.begin()].push_back(
            static_cast<int>(i));
      }
    }
    best_value = input.oracle->eval({});
  }

  void consider() {
    double value = input.oracle->eval(current);
    if (value > best_value ||
        (value == best_value &&
         std::lexicographical_compare(current.begin(), current.end(),
                                      best.begin(), best.end()))) {
      best_value = value;
      best = current;
    }
  }

  void walk(std::size_t pos) {
    if (pos == incident.size()) return;
    walk(pos + 1);  // leave this vertex unmatched
    for (int edge_idx : incident[pos]) {
      int r = edges[edge_idx].r;
      if (r_used[r]) continue;
      r_used[r] = 1;
      current.push_back(edge_idx);
      consider();
      walk(pos + 1);
      current.pop_back();
      r_used[r] = 0;
    }
  }
};

std::uint64_t count_matchings_from(
    const std::vector<std::vector<int>>& incident,
    const std::vector<Edge>& edges, std::vector<char>& r_used,
    std::size_t pos, std::uint64_t cap) {
  if (pos == incident.size()) return 1;
  std::uint64_t total = count_matchings_from(incident, edges, r_used, pos + 1,
                                             cap);
  for (int edge_idx : incident[pos]) {
    if (total > cap) return total;
    int r = edges[edge_idx].r;
    if (r_used[r]) continue;
    r_used[r] = 1;
    total += count_matchings_from(incident, edges, r_used, pos + 1, cap);
    r_used[r] = 0;
  }
  return total;
}

}  // namespace

std::uint64_t count_matchings(const MatchingInput& input, std::uint64_t cap) {
  MatchingEnumerator e(input);
  std::vector<char> r_used(input.r_size, 0);
  return count_matchings_from(e.incident, *input.edges, r_used, 0, cap);
}

std::vector<int> brute_force_matching(const MatchingInput& input) {
  if (count_matchings(input, kEnumerationBudget) > kEnumerationBudget) {
    throw BudgetError("brute_force_matching: more than 2e6 matchings");
  }
  MatchingEnumerator e(input);
  e.walk(0);
  return e.best;
}

std::vector<int> MatchingSolver::solve(const MatchingInput& input) const {
  if (cache_results) {
    auto it = cache_.find(input.revealed_l);
    if (it != cache_.end()) return it->second;
  }
  std::vector<int> result = kind == Kind::kBruteForce
                                ? brute_force_matching(input)
                                : greedy_matching(input);
  if (cache_results) cache_.emplace(input.revealed_l, result);
  return result;
}

// ---------------------------------------------------------------------------
// Continuous greedy.
// ---------------------------------------------------------------------------

namespace {

// Exact per-coordinate weights F(x or 1_j) - F(x) by 2^(n-1) enumeration
// over the complement of j, using a precomputed value table.
void enum_multilinear_marginals(const std::vector<double>& table, int n,
                                const std::vector<double>& x,
                                const std::vector<int>& support,
                                std::vector<double>* out) {
  out->assign(support.size(), 0.0);
  for (std::size_t s = 0; s < support.size(); ++s) {
    int j = support[s];
    std::uint64_t jbit = std::uint64_t{1} << j;
    double total = 0.0;
    // Enumerate masks over [n] \ {j} by skipping masks containing j.
    std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      if (mask & jbit) continue;
      double prob = 1.0;
      std::uint64_t rest = mask;
      for (int i = 0; i < n && prob != 0.0; ++i) {
        if (i == j) continue;
        prob *= (rest >> i) & 1 ? x[i] : 1.0 - x[i];
      }
      if (prob == 0.0) continue;
      total += prob * (table[mask | jbit] - table[mask]);
    }
    (*out)[s] = total * (1.0 - x[j]);
  }
}

}  // namespace

FractionalPoint continuous_greedy(const ValueOracle& oracle,
                                  const PackingPolytope& polytope,
                                  const ContinuousGreedyConfig& config) {
  if (config.steps < 1) throw InputError("continuous greedy needs steps >= 1");
  int n = oracle.ground_size();
  if (polytope.num_items() != n) {
    throw InputError("polytope and oracle dimension mismatch");
  }
  const std::vector<int>& support = polytope.support;
  FractionalPoint x = FractionalPoint::zeros(n);
  if (support.empty()) return x;

  GradientMode mode = config.gradient;
  if (mode == GradientMode::kAuto) {
    if (oracle.has_closed_form_multilinear()) {
      mode = GradientMode::kClosedForm;
    } else if (n <= 20) {
      mode = GradientMode::kEnum;
    } else {
      mode = GradientMode::kMonteCarlo;
    }
  }
  if (mode == GradientMode::kEnum && n > 20) {
    throw BudgetError("enumerated multilinear gradient limited to n <= 20");
  }
  if (mode == GradientMode::kMonteCarlo && config.mc_samples < 1) {
    throw InputError("continuous greedy needs mc_samples >= 1");
  }

  std::vector<double> table;
  if (mode == GradientMode::kEnum) {
    table.resize(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      table[mask] = oracle.eval_nocache(mask_to_set(mask));
    }
  }

  Rng rng(config.seed);
  std::vector<double> weights(support.size());
  std::vector<double> c(n, 0.0);
  std::vector<double> sums;
  ItemSet sample;
  std::vector<double> sample_gains;
  double inv_steps = 1.0 / config.steps;

  for (int step = 0; step < config.steps; ++step) {
    switch (mode) {
      case GradientMode::kClosedForm:
        oracle.multilinear_marginals(x.x, support, &weights);
        break;
      case GradientMode::kEnum:
        enum_multilinear_marginals(table, n, x.x, support, &weights);
        break;
      case GradientMode::kMonteCarlo: {
        sums.assign(support.size(), 0.0);
        for (int s = 0; s < config.mc_samples; ++s) {
          sample.clear();
          for (int j : support) {
            if (x.x[j] > 0.0 && rng.bernoulli(x.x[j])) sample.push_back(j);
          }
          oracle.marginals_over_set(sample, support, &sample_gains);
          for (std::size_t i = 0; i < support.size(); ++i) {
            sums[i] += sample_gains[i];
          }
        }
        for (std::size_t i = 0; i < support.size(); ++i) {
          weights[i] = sums[i] / config.mc_samples;
        }
        break;
      }
      case GradientMode::kAuto:
        break;  // resolved above
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
      c[support[i]] = weights[i];
    }
    FractionalPoint y = lp_maximize(c, polytope);
    for (int j : support) {
      x.x[j] = std::min(1.0, x.x[j] + inv_steps * y.x[j]);
      c[j] = 0.0;
    }
  }
  return x;
}

}  // namespace subsec
