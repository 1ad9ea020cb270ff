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

#include "subsec/properties.hpp"

#include <vector>

#include "subsec/errors.hpp"
#include "subsec/rng.hpp"

namespace subsec {

namespace {

constexpr int kExhaustiveLimit = 12;
constexpr double kTol = 1e-12;

// Value table over all 2^n subsets, indexed by bitmask.
std::vector<double> value_table(const ValueOracle& oracle) {
  int n = oracle.ground_size();
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = oracle.eval_nocache(mask_to_set(mask));
  }
  return table;
}

PropertyWitness make_witness(std::uint64_t s_mask, std::uint64_t t_mask,
                             Item x, double lhs, double rhs) {
  PropertyWitness w;
  w.s = mask_to_set(s_mask);
  w.t = mask_to_set(t_mask);
  w.x = x;
  w.lhs = lhs;
  w.rhs = rhs;
  return w;
}

// Random subset of `pool` keeping each element with probability 1/2.
ItemSet thin(const ItemSet& pool, Rng& rng) {
  ItemSet out;
  for (Item j : pool) {
    if (rng.bernoulli(0.5)) out.push_back(j);
  }
  return out;
}

ItemSet random_subset(int n, Rng& rng) {
  ItemSet out;
  for (int j = 0; j < n; ++j) {
    if (rng.bernoulli(0.5)) out.push_back(j);
  }
  return out;
}

}  // namespace

PropertyReport check_submodular(const ValueOracle& oracle, CheckMode mode,
                                long trials, std::uint64_t seed) {
  PropertyReport report;
  int n = oracle.ground_size();
  if (mode == CheckMode::kExhaustive) {
    if (n > kExhaustiveLimit) {
      throw BudgetError("exhaustive submodularity check limited to n <= 12");
    }
    std::vector<double> v = value_table(oracle);
    std::vector<std::uint64_t> submasks;
    for (Item x = 0; x < n; ++x) {
      std::uint64_t xbit = std::uint64_t{1} << x;
      for (std::uint64_t t = 0; t < v.size(); ++t) {
        if (t & xbit) continue;
        // Submasks of t in ascending order.
        submasks.clear();
        std::uint64_t s = t;
        for (;;) {
          submasks.push_back(s);
          if (s == 0) break;
          s = (s - 1) & t;
        }
        double rhs = v[t | xbit] - v[t];
        for (auto it = submasks.rbegin(); it != submasks.rend(); ++it) {
          double lhs = v[*it | xbit] - v[*it];
          ++report.trials_checked;
          if (lhs < rhs - kTol) {
            report.passed = false;
            report.witness = make_witness(*it, t, x, lhs, rhs);
            return report;
          }
        }
      }
    }
    return report;
  }

  Rng rng(seed);
  for (long trial = 0; trial < trials; ++trial) {
    ItemSet t = random_subset(n, rng);
    if (static_cast<int>(t.size()) == n) t.pop_back();
    ItemSet complement;
    for (int j = 0; j < n; ++j) {
      if (!set_contains(t, j)) complement.push_back(j);
    }
    Item x = complement[rng.bounded(complement.size())];
    ItemSet s = thin(t, rng);
    double lhs =
        oracle.eval_nocache(set_with(s, x)) - oracle.eval_nocache(s);
    double rhs =
        oracle.eval_nocache(set_with(t, x)) - oracle.eval_nocache(t);
    ++report.trials_checked;
    if (lhs < rhs - kTol) {
      report.passed = false;
      PropertyWitness w;
      w.s = s;
      w.t = t;
      w.x = x;
      w.lhs = lhs;
      w.rhs = rhs;
      report.witness = w;
      return report;
    }
  }
  return report;
}

PropertyReport check_monotone(const ValueOracle& oracle, CheckMode mode,
                              long trials, std::uint64_t seed) {
  PropertyReport report;
  int n = oracle.ground_size();
  if (mode == CheckMode::kExhaustive) {
    if (n > kExhaustiveLimit) {
      throw BudgetError("exhaustive monotonicity check limited to n <= 12");
    }
    std::vector<double> v = value_table(oracle);
    for (Item x = 0; x < n; ++x) {
      std::uint64_t xbit = std::uint64_t{1} << x;
      for (std::uint64_t s = 0; s < v.size(); ++s) {
        if (s & xbit) continue;
        ++report.trials_checked;
        if (v[s | xbit] < v[s] - kTol) {
          report.passed = false;
          report.witness =
              make_witness(s, s | xbit, x, v[s | xbit], v[s]);
          return report;
        }
      }
    }
    return report;
  }

  Rng rng(seed);
  for (long trial = 0; trial < trials; ++trial) {
    ItemSet s = random_subset(n, rng);
    if (static_cast<int>(s.size()) == n) s.pop_back();
    ItemSet complement;
    for (int j = 0; j < n; ++j) {
      if (!set_contains(s, j)) complement.push_back(j);
    }
    Item x = complement[rng.bounded(complement.size())];
    double lo = oracle.eval_nocache(s);
    double hi = oracle.eval_nocache(set_with(s, x));
    ++report.trials_checked;
    if (hi < lo - kTol) {
      report.passed = false;
      PropertyWitness w;
      w.s = s;
      w.t = set_with(s, x);
      w.x = x;
      w.lhs = hi;
      w.rhs = lo;
      report.witness = w;
      return report;
    }
  }
  return report;
}

}  // namespace subsec
