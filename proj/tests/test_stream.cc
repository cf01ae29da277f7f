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
#include "repkernel/instance.h"
#include "repkernel/stream.h"
#include "support/oracles.h"

using namespace repkernel;
using testing::E;
using testing::S;

TEST_CASE("fresh stream") {
  const Matchoid mc({Matroid::uniform(S({0, 1, 2}), 2)}, S({0, 1, 2}));
  StreamingRepSet srs(mc, 2);
  CHECK(srs.current().empty());
  CHECK(srs.finish().empty());
  const StreamMemoryReport m = srs.memory_report();
  CHECK(m.rep_size == 0);
  CHECK(m.independence_queries == 0);
  CHECK(m.arrivals == 0);
  srs.push(make_arrival(mc, E(1), 1.0));
  CHECK(srs.current() == S({1}));
}

TEST_CASE("uniform rank 2: arrivals c, a, b") {
  const Matchoid mc({Matroid::uniform(S({0, 1, 2}), 2)}, S({0, 1, 2}));
  StreamingRepSet srs(mc, 2);
  srs.push(make_arrival(mc, E(2), 3));
  CHECK(srs.current() == S({2}));
  srs.push(make_arrival(mc, E(0), 5));
  CHECK(srs.current() == S({0, 2}));
  const StreamStep& last = srs.push(make_arrival(mc, E(1), 4));
  CHECK(srs.current() == S({0, 1}));
  CHECK(last.t == 3);
  CHECK(last.rep_size == 2);
}

TEST_CASE("one block of capacity 1: the lighter element falls into the span") {
  // Guess picks 9 first; the saturated block puts 7 into its span, and no
  // feasible B can hold both, so {9} alone is representative.
  const Matchoid mc({Matroid::partition({S({0, 1}), S({2})}, {1, 1})}, S({0, 1, 2}));
  StreamingRepSet srs(mc, 2);
  srs.push(make_arrival(mc, E(0), 7));
  CHECK(srs.current() == S({0}));
  srs.push(make_arrival(mc, E(1), 9));
  CHECK(srs.current() == S({1}));
  CHECK(testing::ref_representative(srs.current(), S({0, 1}), mc, srs.weights(), 2, false));
}

TEST_CASE("k = 1 keeps the heaviest prefix element") {
  const Instance inst = testing::small_matchoid(3, 10, 10, 2);
  const Matchoid mc = build_matchoid(inst);
  StreamingRepSet srs(mc, 1);
  double best = -1;
  ElementId best_id{};
  for (ElementId e : inst.stream_order) {
    const double w = inst.element(e).weight;
    srs.push(make_arrival(mc, e, w));
    if (w > best) {
      best = w;
      best_id = e;
    }
    CHECK(srs.current() == ElementSet{best_id});
  }
}

TEST_CASE("stream errors") {
  const Matchoid mc({Matroid::uniform(S({0, 1}), 1)}, S({0, 1, 2}));
  CHECK_THROWS_AS(StreamingRepSet(mc, 0), std::invalid_argument);
  StreamingRepSet srs(mc, 2);
  srs.push(make_arrival(mc, E(0), 1));
  CHECK_THROWS_AS(srs.push(make_arrival(mc, E(0), 1)), StreamError);
  StreamElement wrong{E(1), 1.0, {1}};
  CHECK_THROWS_AS(srs.push(wrong), StreamError);
  CHECK(srs.arrivals() == 1);
}

TEST_CASE("index_bits") {
  CHECK(index_bits(0) == 1);
  CHECK(index_bits(1) == 1);
  CHECK(index_bits(2) == 1);
  CHECK(index_bits(3) == 2);
  CHECK(index_bits(4) == 2);
  CHECK(index_bits(5) == 3);
  CHECK(index_bits(1024) == 10);
}

TEST_CASE("prefix representativity, size and per-push query bounds") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::small_matchoid(seed + 500, 2, 10, 2);
    const Matchoid mc = build_matchoid(inst);
    const std::size_t k = 1 + seed % 3;
    const std::uint64_t g = gamma(mc.ell(), k);
    StreamingRepSet srs(mc, k);
    ElementSet prefix;
    CAPTURE(seed);
    for (ElementId e : inst.stream_order) {
      const std::size_t before = srs.current().size();
      const StreamStep& step = srs.push(make_arrival(mc, e, inst.element(e).weight));
      prefix = with_element(prefix, e);
      REQUIRE(step.rep_size <= g);
      REQUIRE(step.independence_queries <= g * (before + 1));
      REQUIRE(step.independence_queries <= g * (g + 1));
      REQUIRE(step.recursion_depth <= (k - 1) * mc.ell());
      REQUIRE(testing::ref_representative(srs.current(), prefix, mc, srs.weights(), k, true));
    }
    const StreamMemoryReport m = srs.memory_report();
    CHECK(m.peak_rep_size <= g);
    CHECK(m.peak_aux_bits <= m.aux_bits_bound);
    CHECK(m.aux_bits_bound == (k - 1) * mc.ell() * 3 * index_bits(inst.elements.size()));
  }
}

TEST_CASE("extraction from the final stream set matches the reference optimum") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::small_matchoid(seed + 900, 2, 12, 2);
    const Matchoid mc = build_matchoid(inst);
    const std::size_t k = 1 + seed % 3;
    StreamingRepSet srs(mc, k);
    for (ElementId e : inst.stream_order) srs.push(make_arrival(mc, e, inst.element(e).weight));
    const ElementSet sol = best_weight_subset(srs.current(), mc, srs.weights(), k);
    CAPTURE(seed);
    CHECK(srs.weights().total(sol) == testing::ref_max_weight(mc, srs.weights(), k));
  }
}
