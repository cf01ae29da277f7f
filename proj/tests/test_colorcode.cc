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

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "repkernel/bruteforce.h"
#include "repkernel/colorcode.h"
#include "repkernel/instance.h"
#include "support/oracles.h"

using namespace repkernel;
using testing::E;
using testing::S;

namespace {

std::uint32_t mask_of(std::span<const ColoredElement> s) {
  std::uint32_t m = 0;
  for (const auto& e : s) m |= e.colors().bits();
  return m;
}

}  // namespace

TEST_CASE("zbar") {
  CHECK(zbar(1) == 1);
  CHECK(zbar(2) == 2);
  CHECK(zbar(3) == 4);
  CHECK(zbar(4) == 4);
  CHECK(zbar(5) == 8);
  CHECK(zbar(16) == 16);
}

TEST_CASE("ColorSet basics") {
  const ColorSet a = ColorSet::of({0, 2});
  CHECK(a.bits() == 5u);
  CHECK(a.size() == 2);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK(ColorSet::of({2}).subset_of(a));
  CHECK(ColorSet::of({1}).disjoint(a));
  CHECK((a | ColorSet::of({1})).bits() == 7u);
}

TEST_CASE("every reduction polynomial is irreducible") {
  for (unsigned b = 1; b <= 16; ++b) {
    CAPTURE(b);
    CHECK(testing::irreducible(reduction_polynomial(b), b));
  }
}

TEST_CASE("field multiplication is a field product") {
  // Commutative, distributive, and every nonzero element has an inverse.
  for (unsigned b : {1u, 2u, 3u, 4u, 5u}) {
    const std::uint32_t size = 1u << b;
    for (std::uint32_t x = 0; x < size; ++x) {
      bool has_inverse = x == 0;
      for (std::uint32_t y = 0; y < size; ++y) {
        CHECK(field_multiply(x, y, b) == field_multiply(y, x, b));
        CHECK(field_multiply(x, y, b) < size);
        if (field_multiply(x, y, b) == 1) has_inverse = true;
        for (std::uint32_t t = 0; t < size; t += 3) {
          CHECK(field_multiply(x, y ^ t, b) == (field_multiply(x, y, b) ^ field_multiply(x, t, b)));
        }
      }
      CHECK(has_inverse);
    }
  }
}

TEST_CASE("hash determinism and range") {
  const HashFunction a = draw_hash(42, 3, 100);
  const HashFunction b = draw_hash(42, 3, 100);
  CHECK(a.num_colors() == 4);
  CHECK(a.seed_bits() == 3u * a.field_bits());
  for (PointId p = 0; p < 100; ++p) {
    CHECK(a(p) == b(p));
    CHECK(a(p) == a(p));
    CHECK(a(p) < 4);
  }
}

TEST_CASE("z = 1 gives a constant colour") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const HashFunction h = draw_hash(seed, 1, 64);
    for (PointId p = 0; p < 64; ++p) CHECK(h(p) == h(0));
  }
}

TEST_CASE("pairwise uniformity for z = 2") {
  const int trials = 100000;
  std::map<std::pair<Color, Color>, int> cells;
  for (int s = 0; s < trials; ++s) {
    const HashFunction h = draw_hash(static_cast<std::uint64_t>(s), 2, 16);
    ++cells[{h(3), h(11)}];
  }
  CHECK(cells.size() == 4);
  const double expected = trials / 4.0;
  const double sigma = std::sqrt(trials * 0.25 * 0.75);
  for (const auto& [cell, count] : cells) {
    CAPTURE(cell.first);
    CAPTURE(cell.second);
    CHECK(std::abs(count - expected) <= 4 * sigma);
  }
}

TEST_CASE("w_C and f_C examples") {
  // p1 (w 5, colour 1), p2 (w 3, colour 1), p3 (w 2, colour 2).
  const std::map<PointId, std::pair<double, Color>> pts = {{1, {5, 1}}, {2, {3, 1}}, {3, {2, 2}}};
  const auto weight = [&](PointId p) { return pts.at(p).first; };
  const Coloring color = [&](PointId p) { return pts.at(p).second; };
  const PointId ps[] = {1, 2, 3};
  const ColoredElement e = color_element(E(0), ps, weight, color);
  CHECK(e.best.size() == 2);
  CHECK(e.colors() == ColorSet::of({1, 2}));
  CHECK(w_C(e, ColorSet::of({1})) == 5);
  CHECK(w_C(e, ColorSet::of({1, 2})) == 7);
  CHECK(w_C(e, ColorSet{}) == 0);
  CHECK_THROWS_AS(w_C(e, ColorSet::of({0})), std::domain_error);

  const PointId qs[] = {3};
  const ColoredElement g = color_element(E(1), qs, weight, color);
  const PointId rs[] = {2};
  const ColoredElement h = color_element(E(2), rs, weight, color);
  const ColoredElement pair[] = {h, g};
  CHECK(f_C(std::span(pair, 1), ColorSet::of({1})) == w_C(h, ColorSet::of({1})));
  CHECK(f_C(pair, ColorSet::of({1, 2})) == w_C(h, ColorSet::of({1})) + w_C(g, ColorSet::of({2})));
  CHECK_THROWS_AS(f_C(pair, ColorSet::of({0})), std::domain_error);
}

TEST_CASE("f_C agrees with the raw-point oracle") {
  std::mt19937_64 gen(5);
  for (int round = 0; round < 300; ++round) {
    const Instance inst = gen_coverage(4, 6, 4, true, round);
    const CoverageInstance c = build_coverage(inst);
    const HashFunction h = draw_hash(round, 3, 6);
    const auto weight = [&](PointId p) { return c.weight(p); };
    std::vector<ColoredElement> colored;
    for (ElementId e : inst.ids()) colored.push_back(color_element(e, c.points(e), weight, h));
    const std::uint32_t all = mask_of(colored);
    for (std::uint32_t m = 0; m < 16; ++m) {
      const auto expected = testing::ref_f_C(c, inst.ids(), h, m);
      if ((m & ~all) != 0) {
        CHECK_FALSE(expected.has_value());
        CHECK_THROWS_AS(f_C(colored, ColorSet(m)), std::domain_error);
      } else {
        REQUIRE(expected.has_value());
        CHECK(f_C(colored, ColorSet(m)) == *expected);
      }
    }
  }
}

TEST_CASE("superadditivity on small instances") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_coverage(4, 6, 3, true, seed);
    const CoverageInstance c = build_coverage(inst);
    const HashFunction h = draw_hash(seed, 3, 6);
    const auto weight = [&](PointId p) { return c.weight(p); };
    std::vector<ColoredElement> colored;
    for (ElementId e : inst.ids()) colored.push_back(color_element(e, c.points(e), weight, h));
    for (std::uint32_t a_mask = 1; a_mask < (1u << colored.size()); ++a_mask) {
      std::vector<ColoredElement> a;
      for (std::size_t i = 0; i < colored.size(); ++i) if ((a_mask >> i) & 1u) a.push_back(colored[i]);
      const std::uint32_t ha = mask_of(a);
      for (const ColoredElement& b : colored) {
        std::vector<ColoredElement> ab = a;
        ab.push_back(b);
        const std::uint32_t hb = b.colors().bits();
        for (std::uint32_t c1 = ha;; c1 = (c1 - 1) & ha) {
          for (std::uint32_t c2 = hb & ~c1;; c2 = (c2 - 1) & (hb & ~c1)) {
            CHECK(f_C(a, ColorSet(c1)) + w_C(b, ColorSet(c2)) <= f_C(ab, ColorSet(c1 | c2)));
            ++checked;
            if (c2 == 0) break;
          }
          if (c1 == 0) break;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("instance counts and membership") {
  const CoverageInstance c(4, {{E(0), {0, 1}}, {E(1), {2}}}, {});
  const Matchoid mc({}, S({0, 1}));
  // Points 0 and 2 get colour 0, point 1 colour 1.
  const Coloring h = [](PointId p) { return p == 1 ? 1u : 0u; };
  StreamingMaxCoverage smc(mc, 2, h, [](PointId) { return 1.0; });
  CHECK(smc.instance_count() == 3);
  smc.push(E(1), c.points(E(1)));
  CHECK(smc.stats().rep_set_pushes == 1);
  CHECK(smc.rep_set_for(ColorSet::of({0})) == S({1}));
  CHECK(smc.rep_set_for(ColorSet::of({1})).empty());
  smc.push(E(0), c.points(E(0)));
  CHECK(smc.stats().rep_set_pushes == 4);
  CHECK(smc.rep_set_for(ColorSet::of({0, 1})) == S({0}));
  CHECK(smc.kernel() == S({0, 1}));
  CHECK(StreamingMaxCoverage(mc, 3, h, [](PointId) { return 1.0; }).instance_count() == 15);
}

TEST_CASE("rep-set sizes stay within gamma") {
  const std::vector<MatroidKind> kinds = {MatroidKind::kUniform, MatroidKind::kPartition,
                                          MatroidKind::kGraphic};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = gen_coverage(10, 8, 3, true, 3, 2, kinds, seed);
    const Matchoid mc = build_matchoid(inst);
    const CoverageInstance c = build_coverage(inst);
    const std::size_t z = 2 + seed % 2;
    const HashFunction h = draw_hash(seed, z, 8);
    StreamingMaxCoverage smc(mc, z, h, [&](PointId p) { return c.weight(p); });
    for (ElementId e : inst.stream_order) smc.push(e, c.points(e));
    const std::uint64_t g = gamma(mc.ell(), z);
    for (std::uint32_t m = 1; m < (1u << smc.num_colors()); ++m) {
      CHECK(smc.rep_set_for(ColorSet(m)).size() <= g);
    }
    CHECK(smc.kernel().size() <= smc.instance_count() * g);
    CHECK(smc.stats().max_points_kept <= smc.num_colors());
  }
}

TEST_CASE("repetitions") {
  CHECK(repetitions(2, 0.1) == 18);
  CHECK(repetitions(3, 0.1) == 47);
  CHECK(repetitions(2, 0.999999) == 1);
  CHECK_THROWS_AS(repetitions(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(repetitions(2, 1.0), std::invalid_argument);
}

TEST_CASE("perfect families") {
  const PointId one[] = {4};
  CHECK(perfect_family(1, one, 8).size() == 1);
  const PointId three[] = {0, 1, 2};
  const auto fam = perfect_family(2, three, 8);
  for (auto [a, b] : {std::pair<PointId, PointId>{0, 1}, {0, 2}, {1, 2}}) {
    bool separated = false;
    for (const auto& h : fam) separated |= h(a) != h(b);
    CHECK(separated);
  }
  std::vector<PointId> pool;
  for (PointId p = 0; p < 10; ++p) pool.push_back(p * 3);
  const auto fam3 = perfect_family(3, pool, 30, 7);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      for (std::size_t k = j + 1; k < pool.size(); ++k) {
        const PointId z[] = {pool[i], pool[j], pool[k]};
        bool ok = false;
        for (const auto& h : fam3) ok |= check_well_colored(h, z);
        CHECK(ok);
      }
  CHECK_THROWS_AS(perfect_family(5, pool, 30), std::invalid_argument);
}

TEST_CASE("extract_weighted_solution examples") {
  const CoverageInstance c(3, {{E(0), {0, 1, 2}}, {E(1), {1}}}, {4, 2, 0});
  const Matchoid mc({Matroid::uniform(S({0, 1}), 1)}, S({0, 1}));
  const auto single = extract_weighted_solution(S({0}), mc, 2, c);
  CHECK(single.set == S({0}));
  CHECK(single.value == 6);
  const CoverageInstance zero(2, {{E(0), {0}}, {E(1), {1}}}, {0, 0});
  CHECK(extract_weighted_solution(S({0, 1}), mc, 2, zero).value == 0);
  CHECK(extract_weighted_solution(ElementSet{}, mc, 2, c).value == 0);
}

TEST_CASE("planted colourings: the kernel holds a solution as good as brute force") {
  const std::vector<MatroidKind> kinds = {MatroidKind::kUniform, MatroidKind::kPartition,
                                          MatroidKind::kGraphic};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t z = 2 + seed % 2;
    const Instance inst = gen_coverage(9, 8, 3, true, 3, 2, kinds, seed);
    const Matchoid mc = build_matchoid(inst);
    const CoverageInstance c = build_coverage(inst);
    const BruteForceResult opt = brute_max_coverage(mc, c, z);
    const auto top = heaviest_points(c, opt.witness, z);
    std::uint64_t s = seed * 1000;
    while (!check_well_colored(draw_hash(s, z, 8), top)) ++s;
    const HashFunction h = draw_hash(s, z, 8);
    StreamingMaxCoverage smc(mc, z, h, [&](PointId p) { return c.weight(p); });
    for (ElementId e : inst.stream_order) smc.push(e, c.points(e));
    const auto sol = extract_weighted_solution(smc.kernel(), mc, z, c);
    CAPTURE(seed);
    CHECK(sol.value >= opt.value);
    CHECK(testing::ref_feasible(mc, sol.set));
    CHECK(testing::ref_top_weight(c, sol.set, z) == sol.value);
  }
}

TEST_CASE("parallel runs match the serial run") {
  const std::vector<MatroidKind> kinds = {MatroidKind::kUniform, MatroidKind::kGraphic};
  const Instance inst = gen_coverage(12, 10, 3, true, 3, 2, kinds, 99);
  const Matchoid mc = build_matchoid(inst);
  const CoverageInstance c = build_coverage(inst);
  const ColorCodingRun serial = randomized_driver(mc, c, inst.stream_order, 2, 0.1, 5, 1);
  const ColorCodingRun threaded = randomized_driver(mc, c, inst.stream_order, 2, 0.1, 5, 4);
  CHECK(serial.runs == 18);
  CHECK(serial.kernel == threaded.kernel);
  CHECK(serial.seeds == threaded.seeds);
  CHECK(serial.independence_queries == threaded.independence_queries);
}
