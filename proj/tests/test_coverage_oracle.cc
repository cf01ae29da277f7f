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

#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "repkernel/bruteforce.h"
#include "repkernel/coverage.h"
#include "repkernel/instance.h"
#include "repkernel/streaming_coverage.h"
#include "support/oracles.h"

using namespace repkernel;
using testing::E;
using testing::S;

namespace {

CoverageInstance points(std::size_t m, std::initializer_list<std::pair<std::uint32_t, PointSet>> sets) {
  std::unordered_map<ElementId, PointSet> map;
  for (const auto& [e, p] : sets) map[E(e)] = p;
  return CoverageInstance(m, std::move(map));
}

std::set<PointId> as_set(const PointSet& p) { return {p.begin(), p.end()}; }

bool direct_same_within(const CoverageInstance& c, ElementId a, ElementId b, ElementId x) {
  std::set<PointId> pa, pb;
  for (PointId p : c.points(a)) if (as_set(c.points(x)).count(p)) pa.insert(p);
  for (PointId p : c.points(b)) if (as_set(c.points(x)).count(p)) pb.insert(p);
  return pa == pb;
}

bool direct_disjoint_outside(const CoverageInstance& c, ElementId a, ElementId b, ElementId x) {
  const auto px = as_set(c.points(x));
  const auto pb = as_set(c.points(b));
  for (PointId p : c.points(a)) {
    if (!px.count(p) && pb.count(p)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("value oracle examples") {
  const CoverageInstance c = points(4, {{1, {1, 2}}, {2, {2, 3}}});
  const CoverageValueOracle f(c);
  CHECK(f.value(ElementSet{}) == 0);
  CHECK(f.value(S({1, 2})) == 3);
  CHECK(f.value(S({1})) == 2);
  CHECK(f.queries() == 3);
}

TEST_CASE("same_points_within examples") {
  // a = 1, b = 2, x = 3.
  {
    const CoverageInstance c = points(4, {{1, {1, 2}}, {2, {1, 3}}, {3, {1}}});
    const CoverageValueOracle f(c);
    CHECK(same_points_within(f, E(1), E(2), E(3)));
    CHECK(f.queries() <= 6);
  }
  {
    const CoverageInstance c = points(4, {{1, {1}}, {2, {2}}, {3, {1, 2}}});
    const CoverageValueOracle f(c);
    CHECK_FALSE(same_points_within(f, E(1), E(2), E(3)));
  }
  {
    const CoverageInstance c = points(4, {{1, {1}}, {3, {1, 2}}});
    const CoverageValueOracle f(c);
    CHECK(same_points_within(f, E(1), E(1), E(3)));
    CHECK(f.queries() == 0);
  }
}

TEST_CASE("disjoint_outside examples") {
  {
    const CoverageInstance c = points(4, {{1, {1, 2}}, {2, {1, 3}}, {3, {1}}});
    const CoverageValueOracle f(c);
    CHECK(disjoint_outside(f, E(1), E(2), E(3)));
    CHECK(f.queries() <= 4);
  }
  {
    const CoverageInstance c = points(4, {{1, {1, 2}}, {2, {2}}, {3, {1}}});
    const CoverageValueOracle f(c);
    CHECK_FALSE(disjoint_outside(f, E(1), E(2), E(3)));
  }
  {
    const CoverageInstance c = points(4, {{1, {0, 2}}, {2, {1}}, {3, {1, 3}}});
    const CoverageValueOracle f(c);
    CHECK(disjoint_outside(f, E(1), E(2), E(3)));
  }
}

TEST_CASE("the bottom element covers nothing and costs no queries") {
  const CoverageInstance c = points(3, {{1, {0, 1}}, {2, {1}}});
  const CoverageValueOracle f(c);
  const ElementId none[] = {kBottom};
  CHECK(marginal(f, E(1), none) == 2);
  CHECK(f.queries() == 1);
  CHECK_FALSE(disjoint_outside(f, E(1), E(2), kBottom));
  CHECK(same_points_within(f, E(1), E(2), kBottom));
}

TEST_CASE("point predicates agree with direct set computations") {
  std::mt19937_64 gen(77);
  for (int round = 0; round < 2000; ++round) {
    std::unordered_map<ElementId, PointSet> sets;
    for (std::uint32_t e = 0; e < 3; ++e) {
      PointSet p;
      for (PointId q = 0; q < 6; ++q) if (gen() % 3 == 0) p.push_back(q);
      sets[E(e)] = p;
    }
    const CoverageInstance c(6, sets);
    const CoverageValueOracle f(c);
    CHECK(same_points_within(f, E(0), E(1), E(2)) == direct_same_within(c, E(0), E(1), E(2)));
    CHECK(disjoint_outside(f, E(0), E(1), E(2)) == direct_disjoint_outside(c, E(0), E(1), E(2)));
    CHECK(f.queries() <= 10);
  }
}

TEST_CASE("find_node examples") {
  const CoverageInstance c = points(3, {{1, {1}}, {2, {1}}, {3, {2}}});
  const CoverageValueOracle f(c);
  const Matchoid mc({Matroid::uniform(S({1, 2, 3}), 3)}, S({1, 2, 3}));
  WeightFn w;
  w.append(E(1), 0);
  w.append(E(2), -1);
  w.append(E(3), -2);
  TreeNode root;
  root.slots.resize(2);
  {
    CoverageContext ctx{mc, f, 2, w};
    CHECK(&find_node(ctx, E(1), root) == &root);
    CHECK_FALSE(ctx.created_node);
  }
  root.slots[0] = S({1});
  {
    CoverageContext ctx{mc, f, 2, w};
    CHECK(&find_node(ctx, E(3), root) == &root);
    CHECK(ctx.query_budget == 4);
  }
  {
    CoverageContext ctx{mc, f, 2, w};
    TreeNode& child = find_node(ctx, E(2), root);
    CHECK(ctx.created_node);
    CHECK(&child != &root);
    CHECK(child.parent_elem == E(1));
    CHECK(child.depth == 1);
    CHECK(root.children.at(E(1)).size() == 1);
  }
}

TEST_CASE("process_elem examples") {
  const CoverageInstance c = points(3, {{1, {0}}, {2, {1}}, {3, {2}}});
  const CoverageValueOracle f(c);
  // One rank-1 constraint over everything: a stored element blocks e.
  const Matchoid mc({Matroid::uniform(S({1, 2, 3}), 1)}, S({1, 2, 3}));
  WeightFn w;
  w.append(E(1), 0);
  w.append(E(2), -1);
  w.append(E(3), -2);
  CoverageContext ctx{mc, f, 2, w};
  TreeNode n;
  n.slots.resize(2);
  CHECK(process_elem(ctx, E(1), n) == std::size_t{0});
  CHECK(n.slots[0] == S({1}));
  CHECK(process_elem(ctx, E(2), n) == std::size_t{1});
  CHECK(n.slots[1] == S({2}));
  CHECK(process_elem(ctx, E(3), n) == std::nullopt);
  CHECK(n.slots[0] == S({1}));
  CHECK(n.slots[1] == S({2}));
}

TEST_CASE("early exit") {
  const CoverageInstance c = points(4, {{0, {0}}, {1, {1, 2}}, {2, {3}}});
  const CoverageValueOracle f(c);
  const Matchoid mc({Matroid::uniform(S({0, 1, 2}), 2)}, S({0, 1, 2}));
  StreamingCoverage sc(mc, f, 2);
  CHECK(sc.push(E(0)).outcome == CoverageArrival::Outcome::kStored);
  CHECK(sc.push(E(1)).outcome == CoverageArrival::Outcome::kEarlyExit);
  CHECK(sc.push(E(2)).outcome == CoverageArrival::Outcome::kAfterExit);
  CHECK(sc.finished_early());
  CHECK(sc.kernel() == S({1}));
  CHECK(extract_coverage_solution(f, sc.kernel(), mc, 2) == S({1}));
}

TEST_CASE("z = 2 example: the kernel keeps e1 and e2") {
  const CoverageInstance c = points(2, {{1, {0}}, {2, {1}}, {3, {0}}});
  const CoverageValueOracle f(c);
  const Matchoid mc({Matroid::uniform(S({1, 2, 3}), 2)}, S({1, 2, 3}));
  StreamingCoverage sc(mc, f, 2);
  for (std::uint32_t e : {1, 2, 3}) sc.push(E(e));
  CHECK(is_subset(S({1, 2}), sc.kernel()));
  const auto sol = extract_coverage_solution(f, sc.kernel(), mc, 2);
  REQUIRE(sol.has_value());
  CHECK(c.covered(*sol).size() >= 2);
  CHECK(sc.tree_count() == 1);
}

TEST_CASE("no feasible set covers z points") {
  // All elements share point 0 and a rank-1 matroid allows one of them.
  const CoverageInstance c = points(3, {{1, {0}}, {2, {0, 1}}, {3, {2}}});
  const CoverageValueOracle f(c);
  const Matchoid mc({Matroid::uniform(S({1, 2, 3}), 1)}, S({1, 2, 3}));
  StreamingCoverage sc(mc, f, 3);
  for (std::uint32_t e : {1, 2, 3}) sc.push(E(e));
  CHECK_FALSE(extract_coverage_solution(f, sc.kernel(), mc, 3).has_value());
  CHECK(testing::ref_max_coverage(mc, c, mc.universe(), 3, 3) < 3);
  CHECK_FALSE(extract_coverage_solution(f, ElementSet{}, mc, 1).has_value());
}

TEST_CASE("z = 1: no trees, any covering element exits early") {
  const CoverageInstance c = points(2, {{1, {}}, {2, {1}}});
  const CoverageValueOracle f(c);
  const Matchoid mc({}, S({1, 2}));
  StreamingCoverage sc(mc, f, 1);
  CHECK(sc.tree_count() == 0);
  CHECK(sc.push(E(1)).outcome == CoverageArrival::Outcome::kNoPoints);
  CHECK(sc.push(E(2)).outcome == CoverageArrival::Outcome::kEarlyExit);
  CHECK(sc.kernel() == S({2}));
}

TEST_CASE("argument and stream errors") {
  const CoverageInstance c = points(2, {{1, {0}}});
  const CoverageValueOracle f(c);
  const Matchoid mc({}, S({1}));
  CHECK_THROWS_AS(StreamingCoverage(mc, f, 0), std::invalid_argument);
  StreamingCoverage sc(mc, f, 3);
  sc.push(E(1));
  CHECK_THROWS_AS(sc.push(E(1)), StreamError);
  CHECK_THROWS_AS(sc.push(E(8)), std::domain_error);
}

TEST_CASE("n_bound and the per-arrival query bound") {
  CHECK(n_bound(1, 1) == 0);
  CHECK(n_bound(1, 2) == 36);
  CHECK(n_bound(1, 3) == 23994);
  for (std::uint64_t ell = 1; ell <= 2; ++ell) {
    for (std::uint64_t z = 1; z <= 4; ++z) {
      const std::uint64_t gz = gamma(ell, z) * z;
      std::uint64_t nodes = 0, power = 1;
      for (std::uint64_t d = 0; d < z; ++d, power *= (std::uint64_t{1} << (z - 1)) * gz) {
        nodes += power;
      }
      CHECK(n_bound(ell, z) == (z - 1) * nodes * gz);
      CHECK(per_arrival_query_bound(ell, z) ==
            1 + z * (4 * gz + 6 * (std::uint64_t{1} << (z - 1)) * gz));
    }
  }
  CHECK_THROWS_AS(n_bound(3, 9), std::overflow_error);
}

TEST_CASE("random instances: invariants, budgets, completeness") {
  const std::vector<MatroidKind> kinds = {MatroidKind::kUniform, MatroidKind::kPartition,
                                          MatroidKind::kGraphic};
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t z = 2 + seed % 2;
    const Instance inst = gen_coverage(4 + seed % 7, 4 + seed % 5, z, false, 2, 1 + seed % 2,
                                       kinds, seed);
    const Matchoid mc = build_matchoid(inst);
    const CoverageInstance c = build_coverage(inst);
    const CoverageValueOracle f(c);
    const CoverageValueOracle f_literal(c);
    StreamingCoverage sc(mc, f, z);
    StreamingCoverage literal(mc, f_literal, z, CoverageOptions{true});
    const std::uint64_t bound = per_arrival_query_bound(mc.ell(), z);
    TreeSnapshot before;
    CAPTURE(seed);
    for (ElementId e : inst.stream_order) {
      const CoverageArrival a = sc.push(e);
      const CoverageArrival b = literal.push(e);
      REQUIRE(a.value_queries <= a.value_query_budget);
      REQUIRE(a.value_query_budget <= bound);
      REQUIRE(b.value_queries <= b.value_query_budget);
      REQUIRE(b.value_query_budget <= bound);
      const auto problems = check_tree_invariants(sc, c, &before);
      for (const auto& p : problems) FAIL_CHECK(p);
      before = snapshot_trees(sc);
    }
    CHECK(sc.kernel() == literal.kernel());
    CHECK(sc.kernel().size() <= n_bound(mc.ell(), z));
    const bool possible = testing::ref_max_coverage(mc, c, mc.universe(), z, z) >= double(z);
    const auto sol = extract_coverage_solution(f, sc.kernel(), mc, z);
    CHECK(sol.has_value() == possible);
    if (sol) {
      CHECK(testing::ref_feasible(mc, *sol));
      CHECK(c.covered(*sol).size() >= z);
    }
  }
}
