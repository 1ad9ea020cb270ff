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

#ifndef SUBSEC_SET_UTIL_HPP_
#define SUBSEC_SET_UTIL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace subsec {

using Item = int;

// Canonical subset encoding: strictly increasing item indices.
using ItemSet = std::vector<Item>;

inline bool is_canonical(const ItemSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

// Sorted, deduplicated copy.
inline ItemSet canonicalize(ItemSet s) {
  if (!is_canonical(s)) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return s;
}

inline bool set_contains(const ItemSet& s, Item j) {
  return std::binary_search(s.begin(), s.end(), j);
}

// Canonical union s + {j}; no-op if already present.
inline ItemSet set_with(const ItemSet& s, Item j) {
  ItemSet out;
  out.reserve(s.size() + 1);
  auto it = std::lower_bound(s.begin(), s.end(), j);
  if (it != s.end() && *it == j) return s;
  out.insert(out.end(), s.begin(), it);
  out.push_back(j);
  out.insert(out.end(), it, s.end());
  return out;
}

inline ItemSet mask_to_set(std::uint64_t mask) {
  ItemSet out;
  while (mask) {
    int j = __builtin_ctzll(mask);
    out.push_back(j);
    mask &= mask - 1;
  }
  return out;
}

struct ItemSetHash {
  std::size_t operator()(const ItemSet& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL + s.size();
    for (Item j : s) {
      std::uint64_t z = static_cast<std::uint64_t>(j) + 0x632be59bd9b4e019ULL;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      h ^= z + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Number of subsets of size <= k from a ground of size n, saturating at cap.
inline std::uint64_t count_subsets_up_to(int n, int k, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (int j = 0; j <= std::min(k, n); ++j) {
    if (j > 0) {
      // C(n, j) = C(n, j-1) * (n-j+1) / j, watch overflow against cap
      if (binom > cap * static_cast<std::uint64_t>(j)) return cap + 1;
      binom = binom * static_cast<std::uint64_t>(n - j + 1) /
              static_cast<std::uint64_t>(j);
    }
    total += binom;
    if (total > cap) return cap + 1;
  }
  return total;
}

}  // namespace subsec

#endif  // SUBSEC_SET_UTIL_HPP_
