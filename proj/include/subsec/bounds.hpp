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

#ifndef SUBSEC_BOUNDS_HPP_
#define SUBSEC_BOUNDS_HPP_

#include <string>

namespace subsec {

// Closed-form competitive-ratio guarantee. `caveat` marks bounds that are
// only known up to an unspecified constant (the packing guarantees); those
// report the exponent factor, never a hard-assertable ratio.
struct BoundReport {
  std::string kind;
  int k = 0;
  double alpha = 1.0;
  double capacity_ratio = 0.0;
  int column_sparsity = 0;
  bool known_parameters = false;
  double value = 0.0;
  bool caveat = false;
};

// (alpha/e) * (1 - sqrt(k-1) / ((k+1) * sqrt(2*pi))); sample size n/e.
BoundReport bound_k_secretary(int k, double alpha);

// Guarantee of the k-secretary algorithm with the greedy subroutine:
// ((1 + 1/(2e^3) - 3/(2e) - (e-1)/(e^2 k)) / (e-1))
//   * (1 - sqrt(k-1) / ((k+1) * sqrt(2*pi))).
BoundReport bound_greedy_k_secretary(int k);

// alpha / 4.
BoundReport bound_matching(double alpha);

// alpha * d^(-2/(B-1)) (unknown parameters) or alpha * d^(-1/(B-1)) (known);
// caveat is always set: the underlying guarantees are Omega-form.
BoundReport bound_packing(double alpha, double capacity_ratio,
                          int column_sparsity, bool known);

// Stage-wise greedy approximation factor 1 - l/(e*n) - 1/(e*k).
double greedy_stage_alpha(double l, double n, double k);

// Additive finite-n correction 6 k^2 / n applied to bound_k_secretary when
// comparing against measured ratios.
double k_secretary_n_adjustment(int k, int n);

}  // namespace subsec

#endif  // SUBSEC_BOUNDS_HPP_
