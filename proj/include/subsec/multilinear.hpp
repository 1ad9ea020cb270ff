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

#ifndef SUBSEC_MULTILINEAR_HPP_
#define SUBSEC_MULTILINEAR_HPP_

#include <cstdint>
#include <vector>

#include "subsec/oracle.hpp"

namespace subsec {

// Point in [0,1]^n.
struct FractionalPoint {
  std::vector<double> x;

  FractionalPoint() = default;
  explicit FractionalPoint(std::vector<double> coords);
  int size() const { return static_cast<int>(x.size()); }
  static FractionalPoint zeros(int n);
  static FractionalPoint indicator(int n, const ItemSet& s);
};

// F(x) = sum over all subsets R of v(R) * prod_{i in R} x_i
//        * prod_{i not in R} (1 - x_i), by full enumeration. n <= 20.
double multilinear_exact(const ValueOracle& oracle, const FractionalPoint& x);

struct McEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

// Unbiased sample-mean estimate of F(x) from `samples` independent random
// sets (include j with probability x_j), with its standard error.
McEstimate multilinear_mc(const ValueOracle& oracle, const FractionalPoint& x,
                          long samples, std::uint64_t seed);

}  // namespace subsec

#endif  // SUBSEC_MULTILINEAR_HPP_
