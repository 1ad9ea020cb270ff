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

#ifndef SUBSEC_RNG_HPP_
#define SUBSEC_RNG_HPP_

#include <cstdint>
#include <vector>

namespace subsec {

// Splittable seeded generator (PCG32 core, splitmix64 stream derivation).
// Every stochastic operation in the library takes an explicit Rng or seed;
// there is no global generator. Output sequences are platform-independent,
// which is what makes reports byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double next_double();

  // Uniform integer in [0, bound), bound >= 1. Unbiased (rejection).
  std::uint32_t bounded(std::uint32_t bound);

  bool bernoulli(double p);

  // Child generator with an independent stream, derived from this
  // generator's seed material (not its current position).
  Rng split(std::uint64_t tag_a, std::uint64_t tag_b = 0) const;

  std::uint64_t seed_material() const { return seed_; }

 private:
  std::uint64_t seed_;   // original derivation material
  std::uint64_t state_;  // pcg32 state
  std::uint64_t inc_;    // pcg32 stream (odd)
};

// Fisher-Yates permutation of 0..n-1 driven by `rng`.
std::vector<int> random_permutation(int n, Rng& rng);

// splitmix64 step; used for seed derivation chains.
std::uint64_t splitmix64(std::uint64_t& state);

// Hash-combine two words into a derived seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag_a,
                          std::uint64_t tag_b = 0);

}  // namespace subsec

#endif  // SUBSEC_RNG_HPP_
