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

#include "subsec/bounds.hpp"

#include <cmath>

#include "subsec/errors.hpp"

namespace subsec {

namespace {

const double kE = std::exp(1.0);

// 1 - sqrt(k-1) / ((k+1) sqrt(2 pi)), the small-k penalty shared by both
// cardinality bounds.
double small_k_factor(int k) {
  return 1.0 - std::sqrt(static_cast<double>(k - 1)) /
                   ((k + 1) * std::sqrt(2.0 * M_PI));
}

}  // namespace

BoundReport bound_k_secretary(int k, double alpha) {
  if (k < 1) throw InputError("bound_k_secretary needs k >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InputError("bound_k_secretary needs alpha in (0, 1]");
  }
  BoundReport report;
  report.kind = "k-secretary";
  report.k = k;
  report.alpha = alpha;
  report.value = alpha / kE * small_k_factor(k);
  return report;
}

BoundReport bound_greedy_k_secretary(int k) {
  if (k < 1) throw InputError("bound_greedy_k_secretary needs k >= 1");
  BoundReport report;
  report.kind = "greedy-k-secretary";
  report.k = k;
  double prefactor = (1.0 + 1.0 / (2.0 * kE * kE * kE) - 3.0 / (2.0 * kE) -
                      (kE - 1.0) / (kE * kE * k)) /
                     (kE - 1.0);
  report.value = prefactor * small_k_factor(k);
  return report;
}

BoundReport bound_matching(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InputError("bound_matching needs alpha in [0, 1]");
  }
  BoundReport report;
  report.kind = "matching";
  report.alpha = alpha;
  report.value = alpha / 4.0;
  return report;
}

BoundReport bound_packing(double alpha, double capacity_ratio,
                          int column_sparsity, bool known) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InputError("bound_packing needs alpha in (0, 1]");
  }
  if (!(capacity_ratio >= 2.0)) {
    throw InputError("bound_packing needs capacity ratio B >= 2");
  }
  if (column_sparsity < 1) throw InputError("bound_packing needs d >= 1");
  BoundReport report;
  report.kind = known ? "packing-known" : "packing-unknown";
  report.alpha = alpha;
  report.capacity_ratio = capacity_ratio;
  report.column_sparsity = column_sparsity;
  report.known_parameters = known;
  double exponent = (known ? -1.0 : -2.0) / (capacity_ratio - 1.0);
  report.value =
      alpha * std::pow(static_cast<double>(column_sparsity), exponent);
  report.caveat = true;
  return report;
}

double greedy_stage_alpha(double l, double n, double k) {
  if (!(n > 0.0) || !(k > 0.0)) {
    throw InputError("greedy_stage_alpha needs n > 0 and k > 0");
  }
  return 1.0 - l / (kE * n) - 1.0 / (kE * k);
}

double k_secretary_n_adjustment(int k, int n) {
  if (n < 1) throw InputError("n adjustment needs n >= 1");
  return 6.0 * static_cast<double>(k) * k / n;
}

}  // namespace subsec
