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

#include "subsec/instance.hpp"

#include <algorithm>
#include <cmath>

#include "subsec/errors.hpp"
#include "subsec/rng.hpp"

namespace subsec {

const CardinalityInstance& Instance::cardinality() const {
  if (variant != Variant::kCardinality) {
    throw InputError("instance is not a cardinality instance");
  }
  return std::get<CardinalityInstance>(payload);
}

const MatchingInstance& Instance::matching() const {
  if (variant != Variant::kMatching) {
    throw InputError("instance is not a matching instance");
  }
  return std::get<MatchingInstance>(payload);
}

const PackingData& Instance::packing() const {
  if (variant != Variant::kPacking) {
    throw InputError("instance is not a packing instance");
  }
  return std::get<PackingData>(payload);
}

int Instance::ground_size() const {
  switch (variant) {
    case Variant::kCardinality:
      return cardinality().ground.n;
    case Variant::kMatching:
      return matching().l_size;
    case Variant::kPacking:
      return packing().core.n();
  }
  return 0;
}

namespace {

std::vector<double> random_weights(int n, Rng& rng, double lo, double hi) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = lo + (hi - lo) * rng.next_double();
  return w;
}

}  // namespace

ValueOracle gen_oracle(const std::string& family, int n, std::uint64_t seed) {
  Rng rng(seed);
  if (family == "coverage") {
    int universe = std::max(4, 2 * n);
    std::vector<std::vector<int>> covers(n);
    for (int j = 0; j < n; ++j) {
      int count = 2 + static_cast<int>(rng.bounded(4));  // 2..5 elements
      for (int c = 0; c < count; ++c) {
        covers[j].push_back(static_cast<int>(rng.bounded(universe)));
      }
    }
    return ValueOracle::coverage(std::move(covers),
                                 random_weights(universe, rng, 0.5, 1.5));
  }
  if (family == "modular") {
    return ValueOracle::modular(random_weights(n, rng, 0.5, 1.5));
  }
  if (family == "concave-sqrt") {
    return ValueOracle::concave_sqrt(random_weights(n, rng, 0.5, 1.5));
  }
  if (family == "concave-cap") {
    std::vector<double> w = random_weights(n, rng, 0.5, 1.5);
    double total = 0.0;
    for (double v : w) total += v;
    return ValueOracle::concave_cap(std::move(w), 0.5 * total);
  }
  throw InputError("unknown oracle family for generation: " + family);
}

Instance gen_instance(const GenParams& params) {
  if (params.n < 1) throw InputError("gen_instance needs n >= 1");
  Rng rng(params.seed);

  switch (params.variant) {
    case Variant::kCardinality: {
      if (params.family == "edge-valued") {
        throw InputError(
            "edge-valued oracles are only valid for the matching variant");
      }
      Instance out;
      out.variant = Variant::kCardinality;
      out.payload = CardinalityInstance{
          GroundSet(params.n),
          gen_oracle(params.family, params.n,
                     derive_seed(params.seed, 0x6f7261ULL)),
          params.k};
      return out;
    }
    case Variant::kMatching: {
      if (params.r_size < 1) throw InputError("matching needs r_size >= 1");
      std::vector<Edge> edges;
      for (int l = 0; l < params.n; ++l) {
        for (int r = 0; r < params.r_size; ++r) {
          if (rng.bernoulli(params.edge_density)) edges.push_back({l, r});
        }
      }
      if (edges.empty()) edges.push_back({0, 0});
      std::string inner = params.family == "edge-valued" ? "coverage"
                                                         : params.family;
      ValueOracle oracle = ValueOracle::edge_valued(
          gen_oracle(inner, static_cast<int>(edges.size()),
                     derive_seed(params.seed, 0x6f7261ULL)));
      Instance out;
      out.variant = Variant::kMatching;
      out.payload = MatchingInstance{params.n, params.r_size,
                                     std::move(edges), std::move(oracle)};
      return out;
    }
    case Variant::kPacking: {
      if (params.family == "edge-valued") {
        throw InputError(
            "edge-valued oracles are only valid for the matching variant");
      }
      int m = params.m;
      int d = params.column_sparsity;
      double ratio = params.capacity_ratio;
      if (m < 1) throw InputError("packing needs m >= 1");
      if (d < 1 || d > m) throw InputError("packing needs 1 <= d <= m");
      if (!(ratio > 1.0)) throw InputError("packing needs B > 1");
      if (params.n < m) {
        throw InputError("packing generator needs n >= m rows coverage");
      }
      std::vector<std::vector<double>> a(
          m, std::vector<double>(params.n, 0.0));
      // Every column gets exactly d nonzero rows; column j always touches
      // row j mod m so no row stays empty.
      for (int j = 0; j < params.n; ++j) {
        std::vector<int> rows{j % m};
        while (static_cast<int>(rows.size()) < d) {
          int candidate = static_cast<int>(rng.bounded(m));
          if (std::find(rows.begin(), rows.end(), candidate) == rows.end()) {
            rows.push_back(candidate);
          }
        }
        for (int i : rows) a[i][j] = 0.5 + 0.5 * rng.next_double();
      }
      // Pin each row's largest coefficient to exactly 1 so that b_i = B
      // reproduces the target capacity ratio bit-for-bit.
      for (int i = 0; i < m; ++i) {
        int arg = -1;
        for (int j = 0; j < params.n; ++j) {
          if (a[i][j] > 0.0 && (arg < 0 || a[i][j] > a[i][arg])) arg = j;
        }
        a[i][arg] = 1.0;
      }
      std::vector<double> b(m, ratio);
      PackingInstance core(GroundSet(params.n),
                           gen_oracle(params.family, params.n,
                                      derive_seed(params.seed, 0x6f7261ULL)),
                           std::move(a), std::move(b));
      if (core.capacity_ratio() != ratio ||
          core.column_sparsity() != d) {
        throw InputError("packing generator failed to hit target (B, d)");
      }
      PackingData data{std::move(core), std::nullopt, std::nullopt};
      if (params.declare_parameters) {
        data.declared_capacity_ratio = ratio;
        data.declared_column_sparsity = d;
      }
      Instance out;
      out.variant = Variant::kPacking;
      out.payload = std::move(data);
      return out;
    }
  }
  throw InputError("unknown variant");
}

}  // namespace subsec
