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

#include "subsec/multilinear.hpp"

#include <cmath>

#include "subsec/errors.hpp"
#include "subsec/rng.hpp"

namespace subsec {

FractionalPoint::FractionalPoint(std::vector<double> coords)
    : x(std::move(coords)) {
  for (double v : x) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InputError("fractional point coordinates must lie in [0, 1]");
    }
  }
}

FractionalPoint FractionalPoint::zeros(int n) {
  FractionalPoint p;
  p.x.assign(n, 0.0);
  return p;
}

FractionalPoint FractionalPoint::indicator(int n, const ItemSet& s) {
  FractionalPoint p = zeros(n);
  for (Item j : s) {
    if (j < 0 || j >= n) throw InputError("indicator item out of range");
    p.x[j] = 1.0;
  }
  return p;
}

double multilinear_exact(const ValueOracle& oracle, const FractionalPoint& x) {
  int n = oracle.ground_size();
  if (x.size() != n) throw InputError("fractional point has wrong dimension");
  if (n > 20) {
    throw BudgetError("multilinear_exact limited to n <= 20");
  }
  double total = 0.0;
  std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    double prob = 1.0;
    for (int j = 0; j < n; ++j) {
      prob *= (mask >> j) & 1 ? x.x[j] : 1.0 - x.x[j];
      if (prob == 0.0) break;
    }
    if (prob == 0.0) continue;
    total += prob * oracle.eval_nocache(mask_to_set(mask));
  }
  return total;
}

McEstimate multilinear_mc(const ValueOracle& oracle, const FractionalPoint& x,
                          long samples, std::uint64_t seed) {
  int n = oracle.ground_size();
  if (x.size() != n) throw InputError("fractional point has wrong dimension");
  if (samples < 1) throw InputError("multilinear_mc needs samples >= 1");
  Rng rng(seed);
  double mean = 0.0;
  double m2 = 0.0;
  ItemSet r;
  for (long i = 0; i < samples; ++i) {
    r.clear();
    for (int j = 0; j < n; ++j) {
      if (rng.bernoulli(x.x[j])) r.push_back(j);
    }
    double value = oracle.eval_nocache(r);
    double delta = value - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (value - mean);
  }
  McEstimate out;
  out.estimate = mean;
  if (samples > 1) {
    double variance = m2 / static_cast<double>(samples - 1);
    if (variance < 0.0) variance = 0.0;
    out.stderr_ = std::sqrt(variance / static_cast<double>(samples));
  }
  return out;
}

}  // namespace subsec
