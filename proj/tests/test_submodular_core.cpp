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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "subsec/errors.hpp"
#include "subsec/instance.hpp"
#include "subsec/multilinear.hpp"
#include "subsec/oracle.hpp"
#include "subsec/properties.hpp"
#include "subsec/rng.hpp"

using namespace subsec;

namespace {

// item0 covers {a,b}, item1 covers {b,c}, unit weights.
ValueOracle two_item_coverage() {
  return ValueOracle::coverage({{0, 1}, {1, 2}}, {1.0, 1.0, 1.0});
}

ValueOracle crafted_supermodular() {
  // v(empty)=0, v({0})=v({1})=1, v({0,1})=3: violates diminishing returns.
  return ValueOracle::custom(2, [](const ItemSet& s) {
    if (s.empty()) return 0.0;
    return s.size() == 1 ? 1.0 : 3.0;
  });
}

}  // namespace

TEST_CASE("rng streams are deterministic and platform independent") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(42), d(43);
  bool all_equal = true;
  for (int i = 0; i < 16; ++i) {
    all_equal = all_equal && c.next_u32() == d.next_u32();
  }
  CHECK_FALSE(all_equal);
  Rng base(7);
  CHECK(base.split(1).next_u64() != base.split(2).next_u64());

  Rng perm_rng(11);
  std::vector<int> p1 = random_permutation(6, perm_rng);
  std::vector<int> sorted = p1;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("coverage eval matches direct union counts") {
  ValueOracle oracle = two_item_coverage();
  CHECK(oracle.eval({0}) == doctest::Approx(2.0));
  CHECK(oracle.eval({0, 1}) == doctest::Approx(3.0));
  CHECK(oracle.eval({}) == doctest::Approx(0.0));
}

TEST_CASE("marginals") {
  ValueOracle oracle = two_item_coverage();
  CHECK(oracle.marginal(1, {0}) == doctest::Approx(1.0));
  CHECK(oracle.marginal(0, {0}) == doctest::Approx(0.0));
  ValueOracle mod = ValueOracle::modular({5, 3, 2});
  CHECK(mod.marginal(2, {0, 1}) == doctest::Approx(2.0));
}

TEST_CASE("eval is set semantic and validates indices") {
  ValueOracle oracle = two_item_coverage();
  CHECK(oracle.eval({1, 0}) == oracle.eval({0, 1}));
  CHECK(oracle.eval({0, 0, 1}) == oracle.eval({0, 1}));
  CHECK_THROWS_AS(oracle.eval({0, 5}), InputError);
  CHECK_THROWS_AS(oracle.marginal(9, {}), InputError);
}

TEST_CASE("memoization is transparent and counts only misses") {
  ValueOracle oracle = two_item_coverage();
  CHECK(oracle.eval_count() == 0);
  double first = oracle.eval({0, 1});
  CHECK(oracle.eval_count() == 1);
  double second = oracle.eval({1, 0});  // same canonical set
  CHECK(oracle.eval_count() == 1);
  CHECK(first == second);
  CHECK(oracle.eval_nocache({0, 1}) == first);
  CHECK(oracle.eval_count() == 1);
}

TEST_CASE("check_submodular on the standard families") {
  CHECK(check_submodular(two_item_coverage(), CheckMode::kExhaustive, 0, 0)
            .passed);
  CHECK(check_submodular(ValueOracle::modular({2, 1, 4}),
                         CheckMode::kExhaustive, 0, 0)
            .passed);
  CHECK(check_submodular(ValueOracle::concave_sqrt({1, 2, 3}),
                         CheckMode::kExhaustive, 0, 0)
            .passed);
  CHECK(check_submodular(ValueOracle::concave_cap({1, 2, 3}, 3.5),
                         CheckMode::kExhaustive, 0, 0)
            .passed);
}

TEST_CASE("check_submodular finds the crafted witness") {
  PropertyReport report =
      check_submodular(crafted_supermodular(), CheckMode::kExhaustive, 0, 0);
  REQUIRE_FALSE(report.passed);
  REQUIRE(report.witness.has_value());
  const PropertyWitness& w = *report.witness;
  CHECK(w.s == ItemSet{});
  CHECK(w.t == ItemSet{1});
  CHECK(w.x == 0);
  // Re-evaluating the inequality on the witness reproduces the violation.
  ValueOracle oracle = crafted_supermodular();
  double lhs = oracle.marginal(w.x, w.s);
  double rhs = oracle.eval(set_with(w.t, w.x)) - oracle.eval(w.t);
  CHECK(lhs == doctest::Approx(w.lhs));
  CHECK(rhs == doctest::Approx(w.rhs));
  CHECK(lhs < rhs);
}

TEST_CASE("check_submodular budget and randomized modes") {
  ValueOracle big = ValueOracle::modular(std::vector<double>(20, 1.0));
  CHECK_THROWS_AS(check_submodular(big, CheckMode::kExhaustive, 0, 0),
                  BudgetError);
  PropertyReport randomized =
      check_submodular(big, CheckMode::kRandomized, 500, 123);
  CHECK(randomized.passed);
  CHECK(randomized.trials_checked == 500);
  // Seeded reproducibility.
  PropertyReport bad1 = check_submodular(crafted_supermodular(),
                                         CheckMode::kRandomized, 2000, 9);
  PropertyReport bad2 = check_submodular(crafted_supermodular(),
                                         CheckMode::kRandomized, 2000, 9);
  REQUIRE_FALSE(bad1.passed);
  CHECK(bad1.trials_checked == bad2.trials_checked);
  CHECK(bad1.witness->s == bad2.witness->s);
  CHECK(bad1.witness->t == bad2.witness->t);
  CHECK(bad1.witness->x == bad2.witness->x);
}

TEST_CASE("check_monotone") {
  CHECK(check_monotone(two_item_coverage(), CheckMode::kExhaustive, 0, 0)
            .passed);
  CHECK(check_monotone(ValueOracle::modular({0.5, 0, 2}),
                       CheckMode::kExhaustive, 0, 0)
            .passed);
  ValueOracle decreasing = ValueOracle::custom(2, [](const ItemSet& s) {
    if (s.empty()) return 0.0;
    return s.size() == 1 ? 2.0 : 1.0;  // v({0,1}) < v({0})
  });
  PropertyReport report =
      check_monotone(decreasing, CheckMode::kExhaustive, 0, 0);
  REQUIRE_FALSE(report.passed);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->lhs < report.witness->rhs);
}

TEST_CASE("generated families satisfy both properties exhaustively") {
  // Diminishing returns checked exhaustively at n = 10 across families.
  for (const char* family :
       {"coverage", "modular", "concave-sqrt", "concave-cap"}) {
    ValueOracle oracle = gen_oracle(family, 10, 77);
    CAPTURE(family);
    CHECK(check_submodular(oracle, CheckMode::kExhaustive, 0, 0).passed);
    CHECK(check_monotone(oracle, CheckMode::kExhaustive, 0, 0).passed);
  }
}

TEST_CASE("multilinear_exact collapses on indicator points") {
  ValueOracle oracle = gen_oracle("coverage", 12, 5);
  // Exhaustive over all subsets at n = 12.
  long mismatches = 0;
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    ItemSet s = mask_to_set(mask);
    FractionalPoint x = FractionalPoint::indicator(12, s);
    if (multilinear_exact(oracle, x) != oracle.eval_nocache(s)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("multilinear_exact basics") {
  ValueOracle oracle = two_item_coverage();
  CHECK(multilinear_exact(oracle, FractionalPoint::zeros(2)) == 0.0);
  ValueOracle mod = ValueOracle::modular({5, 3, 2});
  FractionalPoint x(std::vector<double>{0.5, 0.25, 1.0});
  CHECK(multilinear_exact(mod, x) ==
        doctest::Approx(5 * 0.5 + 3 * 0.25 + 2 * 1.0));
  ValueOracle big = ValueOracle::modular(std::vector<double>(21, 1.0));
  CHECK_THROWS_AS(multilinear_exact(big, FractionalPoint::zeros(21)),
                  BudgetError);
}

TEST_CASE("closed-form multilinear agrees with enumeration") {
  for (const char* family : {"coverage", "modular"}) {
    ValueOracle oracle = gen_oracle(family, 9, 21);
    REQUIRE(oracle.has_closed_form_multilinear());
    Rng rng(3);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<double> coords(9);
      for (double& c : coords) c = rng.next_double();
      FractionalPoint x(coords);
      CHECK(oracle.multilinear_value(x.x) ==
            doctest::Approx(multilinear_exact(oracle, x)).epsilon(1e-9));
      // Coordinate weights match the definition F(x or 1_j) - F(x).
      std::vector<int> support{0, 3, 8};
      std::vector<double> weights;
      oracle.multilinear_marginals(x.x, support, &weights);
      for (std::size_t i = 0; i < support.size(); ++i) {
        FractionalPoint up = x;
        up.x[support[i]] = 1.0;
        CHECK(weights[i] == doctest::Approx(multilinear_exact(oracle, up) -
                                            multilinear_exact(oracle, x))
                                .epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("multilinear_mc on degenerate points is exact") {
  ValueOracle oracle = two_item_coverage();
  FractionalPoint x = FractionalPoint::indicator(2, {0});
  McEstimate mc = multilinear_mc(oracle, x, 50, 7);
  CHECK(mc.estimate == oracle.eval({0}));
  CHECK(mc.stderr_ == 0.0);
}

TEST_CASE("multilinear_mc tracks the exact value") {
  ValueOracle oracle = gen_oracle("coverage", 12, 99);
  Rng rng(4);
  std::vector<double> coords(12);
  for (double& c : coords) c = rng.next_double();
  FractionalPoint x(coords);
  double exact = multilinear_exact(oracle, x);
  McEstimate mc = multilinear_mc(oracle, x, 100000, 11);
  CHECK(std::abs(mc.estimate - exact) <= 4.0 * mc.stderr_);

  ValueOracle mod = ValueOracle::modular({1, 2, 3, 4});
  FractionalPoint y(std::vector<double>{0.1, 0.9, 0.4, 0.7});
  double closed = 0.1 * 1 + 0.9 * 2 + 0.4 * 3 + 0.7 * 4;
  McEstimate mc2 = multilinear_mc(mod, y, 100000, 13);
  CHECK(std::abs(mc2.estimate - closed) <= 4.0 * mc2.stderr_);
}

TEST_CASE("multilinear_mc converges across seeded repetitions") {
  ValueOracle oracle = gen_oracle("concave-cap", 8, 15);
  Rng rng(6);
  std::vector<double> coords(8);
  for (double& c : coords) c = rng.next_double();
  FractionalPoint x(coords);
  double exact = multilinear_exact(oracle, x);
  int within = 0;
  const int reps = 100;
  for (int rep = 0; rep < reps; ++rep) {
    McEstimate mc = multilinear_mc(oracle, x, 2000, 1000 + rep);
    if (std::abs(mc.estimate - exact) <= 4.0 * mc.stderr_) ++within;
  }
  CHECK(within >= 99);
}

TEST_CASE("multilinear extension is coordinate-wise monotone") {
  ValueOracle oracle = gen_oracle("coverage", 9, 31);
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> coords(9);
    for (double& c : coords) c = rng.next_double();
    FractionalPoint lo(coords);
    int j = static_cast<int>(rng.bounded(9));
    FractionalPoint hi = lo;
    hi.x[j] = hi.x[j] + (1.0 - hi.x[j]) * rng.next_double();
    CHECK(multilinear_exact(oracle, hi) >=
          multilinear_exact(oracle, lo) - 1e-12);
  }
}

TEST_CASE("marginals_over_set agrees with per-item marginals") {
  for (const char* family :
       {"coverage", "modular", "concave-sqrt", "concave-cap"}) {
    ValueOracle oracle = gen_oracle(family, 10, 55);
    ItemSet base{1, 4, 7};
    std::vector<int> support;
    for (int j = 0; j < 10; ++j) support.push_back(j);
    std::vector<double> fast;
    oracle.marginals_over_set(base, support, &fast);
    for (int j = 0; j < 10; ++j) {
      CAPTURE(family);
      CAPTURE(j);
      CHECK(fast[j] == doctest::Approx(oracle.marginal(j, base)));
    }
  }
}

TEST_CASE("edge-valued oracle delegates to its inner function") {
  ValueOracle inner = ValueOracle::modular({1, 2, 3});
  ValueOracle edges = ValueOracle::edge_valued(inner);
  CHECK(edges.family() == OracleFamily::kEdgeValued);
  CHECK(edges.eval({0, 2}) == doctest::Approx(4.0));
  CHECK(edges.inner().eval({0, 2}) == doctest::Approx(4.0));
}

TEST_CASE("coverage oracles with universes beyond one word") {
  // 130 elements forces the multi-word mask path.
  int universe = 130;
  std::vector<std::vector<int>> covers{
      {0, 63, 64, 129}, {1, 64}, {63, 65, 128}, {2, 127, 129}};
  std::vector<double> weights(universe);
  Rng rng(2222);
  for (double& w : weights) w = 0.5 + rng.next_double();
  ValueOracle oracle = ValueOracle::coverage(covers, weights);

  auto direct = [&](const ItemSet& s) {
    std::vector<char> covered(universe, 0);
    for (Item j : s) {
      for (int e : covers[j]) covered[e] = 1;
    }
    double total = 0.0;
    for (int e = 0; e < universe; ++e) {
      if (covered[e]) total += weights[e];
    }
    return total;
  };
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    ItemSet s = mask_to_set(mask);
    CHECK(oracle.eval_nocache(s) == doctest::Approx(direct(s)).epsilon(1e-12));
  }
  std::vector<int> support{0, 1, 2, 3};
  std::vector<double> gains;
  oracle.marginals_over_set({1}, support, &gains);
  for (int j = 0; j < 4; ++j) {
    CHECK(gains[j] == doctest::Approx(direct(canonicalize({1, j})) -
                                      direct({1})));
  }
  CHECK(check_submodular(oracle, CheckMode::kExhaustive, 0, 0).passed);
}

TEST_CASE("memo is safe under concurrent readers and writers") {
  ValueOracle oracle = gen_oracle("coverage", 14, 600);
  std::vector<double> reference(1 << 14);
  for (std::uint64_t mask = 0; mask < reference.size(); ++mask) {
    reference[mask] = oracle.eval_nocache(mask_to_set(mask));
  }
  std::atomic<long> disagreements{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&oracle, &reference, &disagreements, t] {
      Rng rng(9000 + t);
      for (int i = 0; i < 3000; ++i) {
        std::uint64_t mask = rng.next_u64() & ((1u << 14) - 1);
        if (oracle.eval(mask_to_set(mask)) != reference[mask]) {
          disagreements.fetch_add(1);
        }
      }
    });
  }
  for (std::thread& w : workers) w.join();
  CHECK(disagreements.load() == 0);
  CHECK(oracle.eval_count() <= 4 * 3000);
}

TEST_CASE("oracle spec round trip") {
  for (const char* family :
       {"coverage", "modular", "concave-sqrt", "concave-cap"}) {
    ValueOracle oracle = gen_oracle(family, 6, 91);
    ValueOracle copy = ValueOracle::from_spec(oracle.to_spec());
    for (std::uint64_t mask = 0; mask < (1u << 6); ++mask) {
      ItemSet s = mask_to_set(mask);
      CHECK(copy.eval_nocache(s) == oracle.eval_nocache(s));
    }
  }
  CHECK_THROWS_AS(
      ValueOracle::custom(2, [](const ItemSet&) { return 0.0; }).to_spec(),
      InputError);
}
