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

#ifndef SUBSEC_LP_HPP_
#define SUBSEC_LP_HPP_

#include <vector>

#include "subsec/multilinear.hpp"
#include "subsec/set_util.hpp"

namespace subsec {

// Packing polytope { x : 0 <= x <= 1, x_j = 0 for j outside support,
// A x <= scale * b } with A >= 0 entrywise and b > 0.
struct PackingPolytope {
  std::vector<std::vector<double>> a;  // m rows of length n
  std::vector<double> b;               // m positive capacities
  double scale = 1.0;                  // in (0, 1]
  std::vector<int> support;            // canonical sorted item subset

  static PackingPolytope create(std::vector<std::vector<double>> a,
                                std::vector<double> b, double scale,
                                std::vector<int> support);

  int num_items() const { return a.empty() ? n_hint : (int)a[0].size(); }
  int num_constraints() const { return static_cast<int>(a.size()); }

  bool contains(const FractionalPoint& x, double tol = 1e-9) const;

  // Used when m = 0 so the item count is still known.
  int n_hint = 0;
};

// Exact maximizer of c^T x over the polytope (dense bounded-variable simplex
// with Bland's rule; tolerance 1e-9). c has one entry per ground-set item.
FractionalPoint lp_maximize(const std::vector<double>& c,
                            const PackingPolytope& polytope);

}  // namespace subsec

#endif  // SUBSEC_LP_HPP_
