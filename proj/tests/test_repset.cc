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

#include <stdexcept>

#include "doctest.h"
#include "repkernel/bruteforce.h"
#include "repkernel/instance.h"
#include "repkernel/repset.h"
#include "support/oracles.h"

using namespace repkernel;
using testing::E;
using testing::S;

namespace {

// Elements a, b, c are ids 0, 1, 2.
struct Abc {
  Matchoid mc;
  WeightFn w;
};

Abc uniform_abc() {
  Abc x{Matchoid({Matroid::uniform(S({0, 1, 2}), 2)}, S({0, 1, 2})), {}};
  x.w.append(E(0), 5);
  x.w.append(E(1), 4);
  x.w.append(E(2), 3);
  return x;
}

Abc p3() {
  Abc x{Matchoid({Matroid::uniform(S({0, 1}), 1), Matroid::uniform(S({1, 2}), 1)},
                 S({0, 1, 2})),
        {}};
  x.w.append(E(0), 3);
  x.w.append(E(1), 2);
  x.w.append(E(2), 1);
  return x;
}

}  // namespace

TEST_CASE("WeightFn orders by weight, then by arrival") {
  WeightFn w;
  w.set(E(4), 2.0, 1);
  w.set(E(7), 2.0, 0);
  w.set(E(1), 3.0, 2);
  CHECK(w.prefers(E(1), E(7)));
  CHECK(w.prefers(E(7), E(4)));
  CHECK_FALSE(w.prefers(E(4), E(7)));
  CHECK_FALSE(w.prefers(E(4), E(4)));
  std::vector<ElementId> v{E(4), E(1), E(7)};
  w.sort_by_priority(v);
  CHECK(v == std::vector<ElementId>{E(1), E(7), E(4)});
  CHECK(w.total(S({1, 4})) == 5.0);
  CHECK_THROWS_AS(w.set(E(4), 1.0, 9), std::invalid_argument);
  CHECK_THROWS_AS(w.set(E(9), 1.0, 0), std::invalid_argument);
  w.append(E(9), 1.0);
  CHECK(w.arrival(E(9)) == 3);
}

TEST_CASE("MultiDimSet tracks the norm") {
  MultiDimSet j(3);
  CHECK(j.norm() == 0);
  j.add(0, E(1));
  j.add(2, E(1));
  j.add(2, E(5));
  CHECK(j.norm() == 3);
  CHECK(j.part(2) == S({1, 5}));
  j.remove(2, E(1));
  CHECK(j.norm() == 2);
  CHECK(j.part(2) == S({5}));
}

TEST_CASE("gamma spot values and agreement with the reference sum") {
  CHECK(gamma(1, 5) == 5);
  CHECK(gamma(2, 3) == 31);
  CHECK(gamma(2, 1) == 1);
  CHECK(gamma(2, 2) == 7);
  for (std::uint64_t ell = 1; ell <= 6; ++ell) {
    CHECK(gamma(ell, 1) == 1);
    for (std::uint64_t k = 1; k <= 8; ++k) {
      const auto ref = testing::ref_gamma(ell, k);
      if (ref) {
        CHECK(gamma(ell, k) == *ref);
      } else {
        CHECK_THROWS_AS(gamma(ell, k), std::overflow_error);
      }
    }
  }
  CHECK(gamma(1, 1000) == 1000);
  CHECK_THROWS_AS(gamma(2, 70), std::overflow_error);
  CHECK_THROWS_AS(gamma(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(gamma(2, 0), std::invalid_argument);
}

TEST_CASE("rep_set examples") {
  {
    const Abc x = uniform_abc();
    CHECK(rep_set(x.mc.universe(), x.mc, x.w, 2).reps == S({0, 1}));
    CHECK(rep_set(x.mc.universe(), x.mc, x.w, 1).reps == S({0}));
  }
  {
    const Abc x = p3();
    const RepSetResult r = rep_set(x.mc.universe(), x.mc, x.w, 2);
    CHECK(r.reps == S({0, 2}));
    CHECK(r.stats.max_norm <= 2);
  }
}

TEST_CASE("k = 1 returns the heaviest element") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = testing::small_matchoid(seed, 1, 9, 3);
    const Matchoid mc = build_matchoid(inst);
    const WeightFn w = build_weights(inst);
    std::vector<ElementId> order(mc.universe().begin(), mc.universe().end());
    w.sort_by_priority(order);
    CHECK(rep_set(mc.universe(), mc, w, 1).reps == ElementSet{order.front()});
  }
}

TEST_CASE("guess base cases") {
  const Abc x = uniform_abc();
  GuessContext ctx{x.mc, x.w, 2};
  MultiDimSet j(x.mc.size());
  CHECK(guess(j, {}, ctx).empty());
  // ||J|| = (k-1) l = 1: the guard stops the recursion after picking x.
  j.add(0, E(0));
  const std::vector<ElementId> y{E(2)};
  CHECK(guess(j, y, ctx) == S({2}));
  CHECK(j.norm() == 1);
  CHECK(ctx.stats.independence_queries == 0);
}

TEST_CASE("rep_set argument errors") {
  const Abc x = uniform_abc();
  CHECK_THROWS_AS(rep_set(x.mc.universe(), x.mc, x.w, 0), std::invalid_argument);
  CHECK_THROWS_AS(rep_set(S({0, 9}), x.mc, x.w, 2), std::domain_error);
  WeightFn partial;
  partial.append(E(0), 1);
  CHECK_THROWS_AS(rep_set(S({0, 1}), x.mc, partial, 2), std::domain_error);
  CHECK(rep_set(ElementSet{}, x.mc, x.w, 2).reps.empty());
}

TEST_CASE("elements outside every matroid keep their representatives") {
  // a and b lie in no matroid; B = {a, b} needs b represented by b itself.
  const Matchoid mc({}, S({0, 1}));
  WeightFn w;
  w.append(E(0), 5);
  w.append(E(1), 4);
  const RepSetResult r = rep_set(mc.universe(), mc, w, 2);
  CHECK(r.reps == S({0, 1}));
  CHECK(testing::ref_representative(r.reps, mc.universe(), mc, w, 2, true));
}

TEST_CASE("kernel_max_weight examples") {
  {
    const Abc x = uniform_abc();
    const KernelResult r = kernel_max_weight(x.mc, x.w, 2);
    CHECK(r.value == 9);
    CHECK(r.solution == S({0, 1}));
  }
  {
    const Abc x = p3();
    const KernelResult r = kernel_max_weight(x.mc, x.w, 2);
    CHECK(r.value == 4);
    CHECK(r.solution == S({0, 2}));
  }
  {
    const Matchoid mc({Matroid::uniform(S({3}), 1)}, S({3}));
    WeightFn w;
    w.append(E(3), 2.5);
    const KernelResult r = kernel_max_weight(mc, w, 1);
    CHECK(r.kernel == S({3}));
    CHECK(r.solution == S({3}));
    CHECK(r.value == 2.5);
  }
}

TEST_CASE("best_weight_subset finds the maximum under feasibility") {
  const Abc x = p3();
  CHECK(best_weight_subset(x.mc.universe(), x.mc, x.w, 2) == S({0, 2}));
  CHECK(best_weight_subset(x.mc.universe(), x.mc, x.w, 1) == S({0}));
  CHECK(best_weight_subset(x.mc.universe(), x.mc, x.w, 0).empty());
}

TEST_CASE("properties on random instances: representativity, size, queries, recursion shape") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Instance inst = testing::small_matchoid(seed, 2, 10, 2);
    const Matchoid mc = build_matchoid(inst);
    const WeightFn w = build_weights(inst);
    const std::size_t k = 1 + seed % 3;
    // Every third run uses a random subset T of the universe.
    ElementSet t;
    for (ElementId e : mc.universe()) {
      if (seed % 3 != 0 || (to_index(e) * 7 + seed) % 3 != 0) t.push_back(e);
    }
    CAPTURE(seed);
    const RepSetResult r = rep_set(t, mc, w, k, /*check_invariants=*/true);
    const std::uint64_t g = gamma(mc.ell(), k);
    CHECK(is_subset(r.reps, t));
    CHECK(r.reps.size() <= g);
    if (mc.ell() == 1) CHECK(r.reps.size() <= k);
    CHECK(r.stats.independence_queries <= g * t.size());
    CHECK(r.stats.max_norm <= (k - 1) * mc.ell());
    CHECK(r.stats.max_children <= mc.ell());
    CHECK(testing::ref_representative(r.reps, t, mc, w, k, /*strict=*/true));
    CHECK(check_joint_rep_set(r.reps, t, mc, w, k).ok);
  }
}

TEST_CASE("kernel value equals the reference optimum") {
  for (std::uint64_t seed = 200; seed < 280; ++seed) {
    const Instance inst = testing::small_matchoid(seed, 2, 12, 2);
    const Matchoid mc = build_matchoid(inst);
    const WeightFn w = build_weights(inst);
    const std::size_t k = 1 + seed % 3;
    CAPTURE(seed);
    const KernelResult r = kernel_max_weight(mc, w, k);
    CHECK(r.value == testing::ref_max_weight(mc, w, k));
    CHECK(testing::ref_feasible(mc, r.solution));
    CHECK(r.solution.size() <= k);
    CHECK(is_subset(r.solution, r.kernel));
  }
}

TEST_CASE("rep_set is deterministic") {
  const Instance inst = testing::small_matchoid(9, 8, 10, 2);
  const Matchoid mc = build_matchoid(inst);
  const WeightFn w = build_weights(inst);
  const RepSetResult a = rep_set(mc.universe(), mc, w, 3);
  const RepSetResult b = rep_set(mc.universe(), mc, w, 3);
  CHECK(a.reps == b.reps);
  CHECK(a.stats.independence_queries == b.stats.independence_queries);
  CHECK(a.stats.calls == b.stats.calls);
}
