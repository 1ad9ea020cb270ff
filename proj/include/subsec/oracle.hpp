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

#ifndef SUBSEC_ORACLE_HPP_
#define SUBSEC_ORACLE_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "subsec/set_util.hpp"

namespace subsec {

// Ground set of n items, indexed 0..n-1. Indices are dense and stable for
// the life of an instance.
struct GroundSet {
  int n = 0;
  explicit GroundSet(int size);
  GroundSet() = default;
};

enum class OracleFamily {
  kCoverage,
  kModular,
  kConcaveSqrt,
  kConcaveCap,
  kEdgeValued,
  kCustom,
};

std::string family_name(OracleFamily family);

// Serializable construction parameters for a ValueOracle.
struct OracleSpec {
  std::string family;  // coverage | modular | concave-sqrt | concave-cap | edge-valued
  // coverage
  std::vector<std::vector<int>> covers;
  std::vector<double> element_weights;
  // modular / concave-over-modular
  std::vector<double> weights;
  double cap = 0.0;  // concave-cap only
  // edge-valued wraps one of the above, applied to edge indices
  std::shared_ptr<OracleSpec> inner;
};

// Black-box monotone submodular set function v over 0..n-1 with a memoized
// eval. v(empty) = 0 for every family. The memo is guarded by a mutex and is
// idempotent, so concurrent readers/writers of identical values are safe.
class ValueOracle {
 public:
  static ValueOracle coverage(std::vector<std::vector<int>> covers,
                              std::vector<double> element_weights);
  static ValueOracle modular(std::vector<double> weights);
  static ValueOracle concave_sqrt(std::vector<double> weights);
  static ValueOracle concave_cap(std::vector<double> weights, double cap);
  static ValueOracle edge_valued(ValueOracle inner);
  // Arbitrary set function for tests and crafted counterexamples. Not
  // serializable; fn must be deterministic and fn(empty) must be 0.
  static ValueOracle custom(int n, std::function<double(const ItemSet&)> fn);

  static ValueOracle from_spec(const OracleSpec& spec);
  // Construction parameters; InputError for custom oracles.
  OracleSpec to_spec() const;

  int ground_size() const { return n_; }
  OracleFamily family() const { return family_; }
  // For edge-valued oracles, the wrapped per-edge-subset function.
  const ValueOracle& inner() const;

  // v(s). Memoized; the eval counter increments only on cache misses.
  double eval(const ItemSet& s) const;
  // Same value, bypassing the memo and the counter.
  double eval_nocache(const ItemSet& s) const;
  // v(s + {j}) - v(s); zero if j already in s.
  double marginal(Item j, const ItemSet& s) const;

  std::uint64_t eval_count() const { return misses_.load(); }

  // Marginal of every item in `support` against the fixed set r, written to
  // (*out)[i] for support[i]. Single pass over the family parameters; this
  // is the hot kernel behind greedy solvers and Monte Carlo gradients.
  void marginals_over_set(const ItemSet& r, const std::vector<Item>& support,
                          std::vector<double>* out) const;

  // Closed-form multilinear extension, where the family admits one
  // (coverage, modular, and edge-valued wrappers around them).
  bool has_closed_form_multilinear() const;
  double multilinear_value(const std::vector<double>& x) const;
  // Coordinate weights F(x or 1_j) - F(x) for each j in support.
  void multilinear_marginals(const std::vector<double>& x,
                             const std::vector<Item>& support,
                             std::vector<double>* out) const;

 private:
  ValueOracle() = default;
  void check_index(Item j) const;
  ItemSet checked_canonical(const ItemSet& s) const;
  double raw_eval(const ItemSet& s) const;  // s canonical and in range

  int n_ = 0;
  OracleFamily family_ = OracleFamily::kCustom;

  // coverage
  int universe_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> cover_masks_;  // n_ * words_
  std::vector<double> element_weights_;
  std::vector<std::vector<int>> coverers_;  // element -> items covering it
  std::vector<std::vector<int>> covers_lists_;

  // modular / concave
  std::vector<double> weights_;
  double cap_ = 0.0;

  std::shared_ptr<ValueOracle> inner_;
  std::function<double(const ItemSet&)> custom_fn_;

  mutable std::mutex memo_mu_;
  mutable std::unordered_map<ItemSet, double, ItemSetHash> memo_;
  mutable std::atomic<std::uint64_t> misses_{0};

 public:
  ValueOracle(const ValueOracle& other);
  ValueOracle& operator=(const ValueOracle& other);
  ValueOracle(ValueOracle&&) noexcept;
  ValueOracle& operator=(ValueOracle&&) noexcept;
  ~ValueOracle() = default;
};

}  // namespace subsec

#endif  // SUBSEC_ORACLE_HPP_
