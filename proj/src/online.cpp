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

#include "subsec/online.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "subsec/errors.hpp"
#include "subsec/rng.hpp"

namespace subsec {

ArrivalOrder::ArrivalOrder(std::vector<int> p) : perm(std::move(p)) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v]) {
      throw InputError("arrival order must be a permutation of 0..n-1");
    }
    seen[v] = 1;
  }
}

ArrivalOrder ArrivalOrder::sample(int n, std::uint64_t seed) {
  Rng rng(seed);
  return ArrivalOrder(random_permutation(n, rng));
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::kCardinality:
      return "cardinality";
    case Variant::kMatching:
      return "matching";
    case Variant::kPacking:
      return "packing";
  }
  return "unknown";
}

int sample_threshold(double p, int n) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InputError("sample fraction p must lie in (0, 1)");
  }
  return static_cast<int>(std::ceil(p * n));
}

RunRecord run_k_secretary(const ValueOracle& oracle, int n, int k,
                          const CardinalitySolver& solver, double p,
                          const ArrivalOrder& order) {
  if (order.size() != n) throw InputError("arrival order size mismatch");
  if (oracle.ground_size() != n) throw InputError("oracle size mismatch");
  if (k < 0) throw InputError("k must be >= 0");

  RunRecord record;
  record.variant = Variant::kCardinality;
  record.sample_size = sample_threshold(p, n);

  ItemSet revealed;
  ItemSet accepted;
  for (int round = 1; round <= n; ++round) {
    int item = order.perm[round - 1];
    revealed = set_with(revealed, item);
    RoundEntry entry;
    entry.round = round;
    entry.item = item;
    if (round >= record.sample_size) {
      ItemSet solution;
      try {
        solution = solver.solve(oracle, revealed);
      } catch (const BudgetError& e) {
        throw BudgetError("round " + std::to_string(round) + ": " + e.what());
      }
      entry.solver_ran = true;
      entry.tentative = set_contains(solution, item);
      if (entry.tentative) {
        entry.feasible = static_cast<int>(accepted.size()) < k;
        if (entry.feasible) {
          accepted = set_with(accepted, item);
          entry.accepted = true;
        }
      }
      entry.offline_solution = std::move(solution);
    }
    record.rounds.push_back(std::move(entry));
  }
  record.final_selection = accepted;
  record.final_value = oracle.eval(accepted);
  return record;
}

RunRecord run_matching(const ValueOracle& edge_oracle, int l_size, int r_size,
                       const std::vector<Edge>& edges,
                       const MatchingSolver& solver, double p,
                       const ArrivalOrder& order) {
  if (order.size() != l_size) throw InputError("arrival order size mismatch");

  RunRecord record;
  record.variant = Variant::kMatching;
  record.sample_size = sample_threshold(p, l_size);

  ItemSet revealed;
  std::vector<int> accepted_edges;
  std::vector<char> r_used(r_size, 0);
  for (int round = 1; round <= l_size; ++round) {
    int vertex = order.perm[round - 1];
    revealed = set_with(revealed, vertex);
    RoundEntry entry;
    entry.round = round;
    entry.item = vertex;
    if (round >= record.sample_size) {
      MatchingInput input(l_size, r_size, edges, edge_oracle, revealed);
      std::vector<int> matching = solver.solve(input);
      entry.solver_ran = true;
      int tentative_edge = -1;
      for (int e : matching) {
        if (edges[e].l == vertex) {
          tentative_edge = e;
          break;
        }
      }
      if (tentative_edge >= 0) {
        entry.tentative = true;
        entry.feasible = !r_used[edges[tentative_edge].r];
        if (entry.feasible) {
          r_used[edges[tentative_edge].r] = 1;
          accepted_edges.push_back(tentative_edge);
          entry.accepted = true;
        }
      }
      entry.offline_solution = std::move(matching);
    }
    record.rounds.push_back(std::move(entry));
  }
  std::sort(accepted_edges.begin(), accepted_edges.end());
  record.final_selection = accepted_edges;
  record.final_value = edge_oracle.eval(accepted_edges);
  return record;
}

PackingInstance::PackingInstance(GroundSet g, ValueOracle o,
                                 std::vector<std::vector<double>> a_in,
                                 std::vector<double> b_in)
    : ground(g), oracle(std::move(o)), a(std::move(a_in)), b(std::move(b_in)) {
  if (oracle.ground_size() != ground.n) {
    throw InputError("packing oracle size mismatch");
  }
  if (a.size() != b.size()) {
    throw InputError("packing instance: A and b dimension mismatch");
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != ground.n) {
      throw InputError("packing instance: constraint row has wrong length");
    }
    for (double v : row) {
      if (!(v >= 0.0)) {
        throw InputError("packing instance: nonnegative coefficients required");
      }
    }
  }
  for (double v : b) {
    if (!(v > 0.0)) {
      throw InputError("packing instance: positive capacities required");
    }
  }
}

double PackingInstance::capacity_ratio() const {
  double ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    double row_max = 0.0;
    for (double v : a[i]) row_max = std::max(row_max, v);
    if (row_max > 0.0) ratio = std::min(ratio, b[i] / row_max);
  }
  return ratio;
}

int PackingInstance::column_sparsity() const {
  int sparsity = 0;
  for (int j = 0; j < n(); ++j) {
    int nonzeros = 0;
    for (const auto& row : a) {
      if (row[j] != 0.0) ++nonzeros;
    }
    sparsity = std::max(sparsity, nonzeros);
  }
  return sparsity;
}

double PackingInstance::psi() const {
  int d = column_sparsity();
  double ratio = capacity_ratio();
  if (d < 1) throw InputError("psi needs column sparsity d >= 1");
  if (!(ratio > 1.0)) throw InputError("psi needs capacity ratio B > 1");
  if (std::isinf(ratio)) return 1.0;
  return std::pow(static_cast<double>(d), 1.0 / (ratio - 1.0));
}

PackingPolytope PackingInstance::polytope(double scale,
                                          std::vector<int> support) const {
  return PackingPolytope::create(a, b, scale, std::move(support));
}

namespace {

RunRecord run_packing_from(const PackingInstance& instance,
                           const ContinuousGreedyConfig& solver_config,
                           const ArrivalOrder& order, std::uint64_t seed,
                           int first_decision_round, Variant variant) {
  int n = instance.n();
  if (order.size() != n) throw InputError("arrival order size mismatch");
  int m = instance.m();

  RunRecord record;
  record.variant = variant;
  record.seed = seed;
  record.sample_size = first_decision_round;

  std::vector<int> support;
  std::vector<double> load(m, 0.0);
  std::vector<std::uint8_t> x(n, 0);
  for (int round = 1; round <= n; ++round) {
    int item = order.perm[round - 1];
    support.insert(
        std::lower_bound(support.begin(), support.end(), item), item);
    RoundEntry entry;
    entry.round = round;
    entry.item = item;
    if (round >= first_decision_round) {
      double scale = static_cast<double>(round) / n;
      ContinuousGreedyConfig config = solver_config;
      config.seed = derive_seed(seed, 0x67726164ULL, round);  // solver stream
      FractionalPoint fractional =
          continuous_greedy(instance.oracle, instance.polytope(scale, support),
                            config);
      entry.solver_ran = true;
      Rng coin(derive_seed(seed, 0x636f696eULL, round));  // rounding stream
      if (coin.bernoulli(fractional.x[item])) {
        entry.tentative = true;
        bool fits = true;
        for (int i = 0; i < m; ++i) {
          if (load[i] + instance.a[i][item] > instance.b[i]) {
            fits = false;
            break;
          }
        }
        entry.feasible = fits;
        if (fits) {
          for (int i = 0; i < m; ++i) load[i] += instance.a[i][item];
          x[item] = 1;
          entry.accepted = true;
        }
      }
      entry.fractional = std::move(fractional.x);
    }
    record.rounds.push_back(std::move(entry));
  }
  record.final_x = x;
  ItemSet chosen;
  for (int j = 0; j < n; ++j) {
    if (x[j]) chosen.push_back(j);
  }
  record.final_selection = chosen;
  record.final_value = instance.oracle.eval(chosen);
  return record;
}

}  // namespace

RunRecord run_packing(const PackingInstance& instance,
                      const ContinuousGreedyConfig& solver_config,
                      const ArrivalOrder& order, std::uint64_t seed) {
  return run_packing_from(instance, solver_config, order, seed, 1,
                          Variant::kPacking);
}

double packing_sample_fraction(double capacity_ratio, int column_sparsity) {
  if (column_sparsity < 1) {
    throw InputError("packing sample fraction needs d >= 1");
  }
  if (!(capacity_ratio > 1.0)) {
    throw InputError("packing sample fraction needs B > 1");
  }
  double inner = 1.0 / (2.0 * column_sparsity);
  return 1.0 - (1.0 / (2.0 * std::exp(1.0))) *
                   std::pow(inner, 1.0 / (capacity_ratio - 1.0));
}

RunRecord run_packing_known(const PackingInstance& instance,
                            const ContinuousGreedyConfig& solver_config,
                            const ArrivalOrder& order, std::uint64_t seed) {
  double ratio = instance.capacity_ratio();
  int d = instance.column_sparsity();
  double p = packing_sample_fraction(ratio, d);
  int first = sample_threshold(p, instance.n());
  RunRecord record = run_packing_from(instance, solver_config, order, seed,
                                      first, Variant::kPacking);
  if (ratio < 2.0) {
    record.warning =
        "capacity ratio B < 2: outside the known-(B, d) guarantee regime";
  }
  return record;
}

}  // namespace subsec
