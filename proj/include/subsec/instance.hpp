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

#ifndef SUBSEC_INSTANCE_HPP_
#define SUBSEC_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subsec/online.hpp"
#include "subsec/oracle.hpp"

namespace subsec {

struct CardinalityInstance {
  GroundSet ground;
  ValueOracle oracle;
  int k = 1;
};

struct MatchingInstance {
  int l_size = 0;
  int r_size = 0;
  std::vector<Edge> edges;  // sorted by (l, r)
  ValueOracle oracle;       // edge-valued, over edge indices

  MatchingInput input(ItemSet revealed) const {
    return MatchingInput(l_size, r_size, edges, oracle, std::move(revealed));
  }
  ItemSet all_left() const {
    ItemSet all(l_size);
    for (int i = 0; i < l_size; ++i) all[i] = i;
    return all;
  }
};

struct PackingData {
  PackingInstance core;
  std::optional<double> declared_capacity_ratio;
  std::optional<int> declared_column_sparsity;
};

struct Instance {
  Variant variant = Variant::kCardinality;
  std::variant<std::monostate, CardinalityInstance, MatchingInstance,
               PackingData>
      payload;

  const CardinalityInstance& cardinality() const;
  const MatchingInstance& matching() const;
  const PackingData& packing() const;
  int ground_size() const;  // n, |L|, or item count
};

struct GenParams {
  Variant variant = Variant::kCardinality;
  int n = 10;  // items (cardinality, packing) or left vertices (matching)
  std::string family = "coverage";
  std::uint64_t seed = 0;
  // cardinality
  int k = 2;
  // matching
  int r_size = 4;
  double edge_density = 0.7;
  // packing: A is constructed to hit these exactly, then re-derived to check
  int m = 5;
  double capacity_ratio = 2.0;
  int column_sparsity = 2;
  bool declare_parameters = false;
};

// Deterministic given params.seed.
Instance gen_instance(const GenParams& params);

// Random oracle of the given family over n items (helper shared by the
// generator and the tests).
ValueOracle gen_oracle(const std::string& family, int n, std::uint64_t seed);

}  // namespace subsec

#endif  // SUBSEC_INSTANCE_HPP_
