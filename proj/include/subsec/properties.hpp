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

#ifndef SUBSEC_PROPERTIES_HPP_
#define SUBSEC_PROPERTIES_HPP_

#include <cstdint>
#include <optional>

#include "subsec/oracle.hpp"
#include "subsec/set_util.hpp"

namespace subsec {

enum class CheckMode { kExhaustive, kRandomized };

// A triple violating the tested inequality. For submodularity the test is
// v(S+{x}) - v(S) >= v(T+{x}) - v(T) with S subset of T, x outside T; for
// monotonicity it is v(T) >= v(S) with T = S + {x}.
struct PropertyWitness {
  ItemSet s;
  ItemSet t;
  Item x = -1;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct PropertyReport {
  bool passed = true;
  std::optional<PropertyWitness> witness;
  long trials_checked = 0;
};

// Exhaustive mode enumerates every (S subset of T, x outside T); it requires
// n <= 12. Randomized mode samples `trials` triples from the seeded stream.
PropertyReport check_submodular(const ValueOracle& oracle, CheckMode mode,
                                long trials, std::uint64_t seed);

// Same contract over pairs (S, S + {x}).
PropertyReport check_monotone(const ValueOracle& oracle, CheckMode mode,
                              long trials, std::uint64_t seed);

}  // namespace subsec

#endif  // SUBSEC_PROPERTIES_HPP_
