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

#include "subsec/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "subsec/errors.hpp"

namespace subsec {

GroundSet::GroundSet(int size) : n(size) {
  if (size < 1) throw InputError("ground set needs n >= 1");
}

std::string family_name(OracleFamily family) {
  switch (family) {
    case OracleFamily::kCoverage:
      return "coverage";
    case OracleFamily::kModular:
      return "modular";
    case OracleFamily::kConcaveSqrt:
      return "concave-sqrt";
    case OracleFamily::kConcaveCap:
      return "concave-cap";
    case OracleFamily::kEdgeValued:
      return "edge-valued";
    case OracleFamily::kCustom:
      return "custom";
  }
  return "unknown";
}

ValueOracle::ValueOracle(const ValueOracle& other)
    : n_(other.n_),
      family_(other.family_),
      universe_(other.universe_),
      words_(other.words_),
      cover_masks_(other.cover_masks_),
      element_weights_(other.element_weights_),
      coverers_(other.coverers_),
      covers_lists_(other.covers_lists_),
      weights_(other.weights_),
      cap_(other.cap_),
      inner_(other.inner_),
      custom_fn_(other.custom_fn_) {
  std::lock_guard<std::mutex> lock(other.memo_mu_);
  memo_ = other.memo_;
  misses_.store(other.misses_.load());
}

ValueOracle& ValueOracle::operator=(const ValueOracle& other) {
  if (this == &other) return *this;
  ValueOracle copy(other);
  *this = std::move(copy);
  return *this;
}

ValueOracle::ValueOracle(ValueOracle&& other) noexcept
    : n_(other.n_),
      family_(other.family_),
      universe_(other.universe_),
      words_(other.words_),
      cover_masks_(std::move(other.cover_masks_)),
      element_weights_(std::move(other.element_weights_)),
      coverers_(std::move(other.coverers_)),
      covers_lists_(std::move(other.covers_lists_)),
      weights_(std::move(other.weights_)),
      cap_(other.cap_),
      inner_(std::move(other.inner_)),
      custom_fn_(std::move(other.custom_fn_)),
      memo_(std::move(other.memo_)) {
  misses_.store(other.misses_.load());
}

ValueOracle& ValueOracle::operator=(ValueOracle&& other) noexcept {
  if (this == &other) return *this;
  n_ = other.n_;
  family_ = other.family_;
  universe_ = other.universe_;
  words_ = other.words_;
  cover_masks_ = std::move(other.cover_masks_);
  element_weights_ = std::move(other.element_weights_);
  coverers_ = std::move(other.coverers_);
  covers_lists_ = std::move(other.covers_lists_);
  weights_ = std::move(other.weights_);
  cap_ = other.cap_;
  inner_ = std::move(other.inner_);
  custom_fn_ = std::move(other.custom_fn_);
  memo_ = std::move(other.memo_);
  misses_.store(other.misses_.load());
  return *this;
}

namespace {

void require_nonnegative(const std::vector<double>& w, const char* what) {
  for (double v : w) {
    if (!(v >= 0.0)) {
      throw InputError(std::string(what) + ": nonnegative weights required");
    }
  }
}

}  // namespace

ValueOracle ValueOracle::coverage(std::vector<std::vector<int>> covers,
                                  std::vector<double> element_weights) {
  if (covers.empty()) throw InputError("coverage oracle: empty ground set");
  require_nonnegative(element_weights, "coverage oracle");
  ValueOracle o;
  o.family_ = OracleFamily::kCoverage;
  o.n_ = static_cast<int>(covers.size());
  o.universe_ = static_cast<int>(element_weights.size());
  o.words_ = (o.universe_ + 63) / 64;
  o.element_weights_ = std::move(element_weights);
  o.cover_masks_.assign(static_cast<std::size_t>(o.n_) * o.words_, 0);
  o.coverers_.assign(o.universe_, {});
  for (int j = 0; j < o.n_; ++j) {
    std::sort(covers[j].begin(), covers[j].end());
    covers[j].erase(std::unique(covers[j].begin(), covers[j].end()),
                    covers[j].end());
    for (int e : covers[j]) {
      if (e < 0 || e >= o.universe_) {
        throw InputError("coverage oracle: covered element out of range");
      }
      o.cover_masks_[static_cast<std::size_t>(j) * o.words_ + e / 64] |=
          std::uint64_t{1} << (e % 64);
      o.coverers_[e].push_back(j);
    }
  }
  o.covers_lists_ = std::move(covers);
  return o;
}

ValueOracle ValueOracle::modular(std::vector<double> weights) {
  if (weights.empty()) throw InputError("modular oracle: empty ground set");
  require_nonnegative(weights, "modular oracle");
  ValueOracle o;
  o.family_ = OracleFamily::kModular;
  o.n_ = static_cast<int>(weights.size());
  o.weights_ = std::move(weights);
  return o;
}

ValueOracle ValueOracle::concave_sqrt(std::vector<double> weights) {
  ValueOracle o = modular(std::move(weights));
  o.family_ = OracleFamily::kConcaveSqrt;
  return o;
}

ValueOracle ValueOracle::concave_cap(std::vector<double> weights, double cap) {
  if (!(cap >= 0.0)) throw InputError("concave-cap oracle: cap must be >= 0");
  ValueOracle o = modular(std::move(weights));
  o.family_ = OracleFamily::kConcaveCap;
  o.cap_ = cap;
  return o;
}

ValueOracle ValueOracle::edge_valued(ValueOracle inner) {
  if (inner.family_ == OracleFamily::kEdgeValued) {
    throw InputError("edge-valued oracle: inner oracle already edge-valued");
  }
  ValueOracle o;
  o.family_ = OracleFamily::kEdgeValued;
  o.n_ = inner.n_;
  o.inner_ = std::make_shared<ValueOracle>(std::move(inner));
  return o;
}

ValueOracle ValueOracle::custom(int n,
                                std::function<double(const ItemSet&)> fn) {
  if (n < 1) throw InputError("custom oracle: n >= 1 required");
  ValueOracle o;
  o.family_ = OracleFamily::kCustom;
  o.n_ = n;
  o.custom_fn_ = std::move(fn);
  return o;
}

ValueOracle ValueOracle::from_spec(const OracleSpec& spec) {
  if (spec.family == "coverage") {
    return coverage(spec.covers, spec.element_weights);
  }
  if (spec.family == "modular") return modular(spec.weights);
  if (spec.family == "concave-sqrt") return concave_sqrt(spec.weights);
  if (spec.family == "concave-cap") return concave_cap(spec.weights, spec.cap);
  if (spec.family == "edge-valued") {
    if (!spec.inner) {
      throw InputError("edge-valued oracle spec: missing inner family");
    }
    return edge_valued(from_spec(*spec.inner));
  }
  throw InputError("unknown oracle family: " + spec.family);
}

OracleSpec ValueOracle::to_spec() const {
  OracleSpec spec;
  spec.family = family_name(family_);
  switch (family_) {
    case OracleFamily::kCoverage:
      spec.covers = covers_lists_;
      spec.element_weights = element_weights_;
      break;
    case OracleFamily::kModular:
    case OracleFamily::kConcaveSqrt:
      spec.weights = weights_;
      break;
    case OracleFamily::kConcaveCap:
      spec.weights = weights_;
      spec.cap = cap_;
      break;
    case OracleFamily::kEdgeValued:
      spec.inner = std::make_shared<OracleSpec>(inner_->to_spec());
      break;
    case OracleFamily::kCustom:
      throw InputError("custom oracles are not serializable");
  }
  return spec;
}

const ValueOracle& ValueOracle::inner() const {
  if (!inner_) throw InputError("oracle has no inner function");
  return *inner_;
}

void ValueOracle::check_index(Item j) const {
  if (j < 0 || j >= n_) {
    throw InputError("item index " + std::to_string(j) +
                     " out of range [0, " + std::to_string(n_) + ")");
  }
}

ItemSet ValueOracle::checked_canonical(const ItemSet& s) const {
  ItemSet c = canonicalize(s);
  if (!c.empty()) {
    if (c.front() < 0 || c.back() >= n_) {
      throw InputError("subset contains out-of-range item index");
    }
  }
  return c;
}

double ValueOracle::raw_eval(const ItemSet& s) const {
  switch (family_) {
    case OracleFamily::kCoverage: {
      if (s.empty()) return 0.0;
      double total = 0.0;
      if (words_ == 1) {
        std::uint64_t acc = 0;
        for (Item j : s) acc |= cover_masks_[static_cast<std::size_t>(j)];
        while (acc) {
          int e = __builtin_ctzll(acc);
          total += element_weights_[e];
          acc &= acc - 1;
        }
      } else {
        std::vector<std::uint64_t> acc(words_, 0);
        for (Item j : s) {
          const std::uint64_t* m =
              &cover_masks_[static_cast<std::size_t>(j) * words_];
          for (int w = 0; w < words_; ++w) acc[w] |= m[w];
        }
        for (int w = 0; w < words_; ++w) {
          std::uint64_t word = acc[w];
          while (word) {
            int e = w * 64 + __builtin_ctzll(word);
            total += element_weights_[e];
            word &= word - 1;
          }
        }
      }
      return total;
    }
    case OracleFamily::kModular: {
      double total = 0.0;
      for (Item j : s) total += weights_[j];
      return total;
    }
    case OracleFamily::kConcaveSqrt: {
      double total = 0.0;
      for (Item j : s) total += weights_[j];
      return std::sqrt(total);
    }
    case OracleFamily::kConcaveCap: {
      double total = 0.0;
      for (Item j : s) total += weights_[j];
      return std::min(cap_, total);
    }
    case OracleFamily::kEdgeValued:
      return inner_->eval_nocache(s);
    case OracleFamily::kCustom:
      return custom_fn_(s);
  }
  return 0.0;
}

double ValueOracle::eval(const ItemSet& s) const {
  ItemSet c = checked_canonical(s);
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
  }
  double value = raw_eval(c);
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto [it, inserted] = memo_.emplace(std::move(c), value);
    if (inserted) misses_.fetch_add(1);
    return it->second;
  }
}

double ValueOracle::eval_nocache(const ItemSet& s) const {
  return raw_eval(checked_canonical(s));
}

double ValueOracle::marginal(Item j, const ItemSet& s) const {
  check_index(j);
  ItemSet base = checked_canonical(s);
  if (set_contains(base, j)) return 0.0;
  return eval(set_with(base, j)) - eval(base);
}

void ValueOracle::marginals_over_set(const ItemSet& r,
                                     const std::vector<Item>& support,
                                     std::vector<double>* out) const {
  out->resize(support.size());
  switch (family_) {
    case OracleFamily::kCoverage: {
      if (words_ == 1) {
        std::uint64_t acc = 0;
        for (Item j : r) acc |= cover_masks_[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < support.size(); ++i) {
          std::uint64_t fresh =
              cover_masks_[static_cast<std::size_t>(support[i])] & ~acc;
          double gain = 0.0;
          while (fresh) {
            gain += element_weights_[__builtin_ctzll(fresh)];
            fresh &= fresh - 1;
          }
          (*out)[i] = gain;
        }
      } else {
        std::vector<std::uint64_t> acc(words_, 0);
        for (Item j : r) {
          const std::uint64_t* m =
              &cover_masks_[static_cast<std::size_t>(j) * words_];
          for (int w = 0; w < words_; ++w) acc[w] |= m[w];
        }
        for (std::size_t i = 0; i < support.size(); ++i) {
          const std::uint64_t* m =
              &cover_masks_[static_cast<std::size_t>(support[i]) * words_];
          double gain = 0.0;
          for (int w = 0; w < words_; ++w) {
            std::uint64_t fresh = m[w] & ~acc[w];
            while (fresh) {
              gain += element_weights_[w * 64 + __builtin_ctzll(fresh)];
              fresh &= fresh - 1;
            }
          }
          (*out)[i] = gain;
        }
      }
      return;
    }
    case OracleFamily::kModular: {
      for (std::size_t i = 0; i < support.size(); ++i) {
        (*out)[i] = set_contains(r, support[i]) ? 0.0 : weights_[support[i]];
      }
      return;
    }
    case OracleFamily::kConcaveSqrt:
    case OracleFamily::kConcaveCap: {
      double base = 0.0;
      for (Item j : r) base += weights_[j];
      double base_value = family_ == OracleFamily::kConcaveSqrt
                              ? std::sqrt(base)
                              : std::min(cap_, base);
      for (std::size_t i = 0; i < support.size(); ++i) {
        if (set_contains(r, support[i])) {
          (*out)[i] = 0.0;
        } else {
          double with = base + weights_[support[i]];
          double with_value = family_ == OracleFamily::kConcaveSqrt
                                  ? std::sqrt(with)
                                  : std::min(cap_, with);
          (*out)[i] = with_value - base_value;
        }
      }
      return;
    }
    case OracleFamily::kEdgeValued:
      inner_->marginals_over_set(r, support, out);
      return;
    case OracleFamily::kCustom: {
      double base = raw_eval(r);
      for (std::size_t i = 0; i < support.size(); ++i) {
        if (set_contains(r, support[i])) {
          (*out)[i] = 0.0;
        } else {
          (*out)[i] = raw_eval(set_with(r, support[i])) - base;
        }
      }
      return;
    }
  }
}

bool ValueOracle::has_closed_form_multilinear() const {
  switch (family_) {
    case OracleFamily::kCoverage:
    case OracleFamily::kModular:
      return true;
    case OracleFamily::kEdgeValued:
      return inner_->has_closed_form_multilinear();
    default:
      return false;
  }
}

double ValueOracle::multilinear_value(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw InputError("fractional point has wrong dimension");
  }
  switch (family_) {
    case OracleFamily::kCoverage: {
      // F(x) = sum_e w_e (1 - prod_{j covering e} (1 - x_j))
      double total = 0.0;
      for (int e = 0; e < universe_; ++e) {
        double miss = 1.0;
        for (int j : coverers_[e]) miss *= 1.0 - x[j];
        total += element_weights_[e] * (1.0 - miss);
      }
      return total;
    }
    case OracleFamily::kModular: {
      double total = 0.0;
      for (int j = 0; j < n_; ++j) total += weights_[j] * x[j];
      return total;
    }
    case OracleFamily::kEdgeValued:
      return inner_->multilinear_value(x);
    default:
      throw InputError("no closed-form multilinear extension for family " +
                       family_name(family_));
  }
}

void ValueOracle::multilinear_marginals(const std::vector<double>& x,
                                        const std::vector<Item>& support,
                                        std::vector<double>* out) const {
  if (static_cast<int>(x.size()) != n_) {
    throw InputError("fractional point has wrong dimension");
  }
  out->assign(support.size(), 0.0);
  switch (family_) {
    case OracleFamily::kCoverage: {
      std::vector<int> pos(n_, -1);
      for (std::size_t i = 0; i < support.size(); ++i) {
        pos[support[i]] = static_cast<int>(i);
      }
      // Raising x_j to 1 covers element e for sure, so the gain on e is
      // w_e * prod_{i covering e} (1 - x_i), identical for every j in
      // e's coverer list.
      for (int e = 0; e < universe_; ++e) {
        const std::vector<int>& cov = coverers_[e];
        if (cov.empty()) continue;
        double miss = element_weights_[e];
        for (int i : cov) {
          miss *= 1.0 - x[i];
          if (miss == 0.0) break;
        }
        if (miss == 0.0) continue;
        for (int j : cov) {
          if (pos[j] >= 0) (*out)[pos[j]] += miss;
        }
      }
      return;
    }
    case OracleFamily::kModular: {
      for (std::size_t i = 0; i < support.size(); ++i) {
        int j = support[i];
        (*out)[i] = weights_[j] * (1.0 - x[j]);
      }
      return;
    }
    case OracleFamily::kEdgeValued:
      inner_->multilinear_marginals(x, support, out);
      return;
    default:
      throw InputError("no closed-form multilinear extension for family " +
                       family_name(family_));
  }
}

}  // namespace subsec
