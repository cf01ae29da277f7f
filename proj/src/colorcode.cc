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

#include "repkernel/colorcode.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <thread>

namespace repkernel {

ColorSet ColorSet::of(std::initializer_list<Color> colors) {
  ColorSet c;
  for (Color x : colors) c.add(x);
  return c;
}

std::size_t ColorSet::size() const { return std::popcount(bits_); }

std::uint32_t zbar(std::uint32_t z) {
  if (z == 0) throw std::invalid_argument("zbar: z must be positive");
  return std::bit_ceil(z);
}

std::uint32_t reduction_polynomial(unsigned bits) {
  static constexpr std::uint32_t kTable[] = {
      0x0,    0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,    0x11D,
      0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
  };
  if (bits < 1 || bits > 16) {
    throw std::invalid_argument("reduction_polynomial: field degree must be in [1, 16]");
  }
  return kTable[bits];
}

std::uint32_t field_multiply(std::uint32_t a, std::uint32_t b, unsigned bits) {
  const std::uint32_t poly = reduction_polynomial(bits);
  const std::uint32_t top = 1u << bits;
  std::uint32_t product = 0;
  while (b != 0) {
    if (b & 1u) product ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= poly;
  }
  return product;
}

HashFunction::HashFunction(std::uint64_t seed, std::uint32_t z, std::uint64_t num_points)
    : seed_(seed), z_(z) {
  zbar_ = zbar(z);
  if (zbar_ > kMaxColors) throw std::invalid_argument("HashFunction: too many colors");
  if (num_points > (std::uint64_t{1} << 16)) {
    throw std::invalid_argument("HashFunction: at most 65536 points supported");
  }
  color_bits_ = static_cast<unsigned>(std::countr_zero(zbar_));
  const auto mbar = std::bit_ceil(std::max<std::uint64_t>(num_points, 1));
  field_bits_ = std::max({1u, color_bits_, static_cast<unsigned>(std::countr_zero(mbar))});
  std::mt19937_64 gen(seed);
  const std::uint32_t mask = (1u << field_bits_) - 1;
  coefficients_.resize(z);
  for (std::uint32_t& c : coefficients_) c = static_cast<std::uint32_t>(gen()) & mask;
}

Color HashFunction::operator()(PointId p) const {
  if (p >> field_bits_) {
    throw std::domain_error("HashFunction: point " + std::to_string(p) +
                            " outside the field");
  }
  std::uint32_t acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = field_multiply(acc, p, field_bits_) ^ *it;
  }
  return acc >> (field_bits_ - color_bits_);
}

HashFunction draw_hash(std::uint64_t seed, std::uint32_t z, std::uint64_t num_points) {
  if (z == 0) throw std::invalid_argument("draw_hash: z must be positive");
  return HashFunction(seed, z, num_points);
}

ColorSet ColoredElement::colors() const {
  ColorSet c;
  for (const ColoredPoint& p : best) c.add(p.color);
  return c;
}

ColoredElement color_element(ElementId e, std::span<const PointId> points,
                             const std::function<double(PointId)>& weight,
                             const Coloring& h) {
  ColoredElement out;
  out.id = e;
  for (PointId p : points) {
    ColoredPoint cp{p, weight(p), h(p)};
    auto it = std::find_if(out.best.begin(), out.best.end(),
                           [&](const ColoredPoint& q) { return q.color == cp.color; });
    if (it == out.best.end()) {
      out.best.push_back(cp);
    } else if (cp.weight > it->weight || (cp.weight == it->weight && cp.point < it->point)) {
      *it = cp;
    }
  }
  std::sort(out.best.begin(), out.best.end(),
            [](const ColoredPoint& a, const ColoredPoint& b) { return a.color < b.color; });
  return out;
}

double w_C(const ColoredElement& e, ColorSet c) {
  if (!c.subset_of(e.colors())) {
    throw std::domain_error("w_C: element " + std::to_string(to_index(e.id)) +
                            " lacks a color of C");
  }
  double sum = 0.0;
  for (const ColoredPoint& p : e.best) {
    if (c.contains(p.color)) sum += p.weight;
  }
  return sum;
}

double f_C(std::span<const ColoredElement> s, ColorSet c) {
  double sum = 0.0;
  for (Color color = 0; color < 32; ++color) {
    if (!c.contains(color)) continue;
    bool seen = false;
    double heaviest = 0.0;
    for (const ColoredElement& e : s) {
      for (const ColoredPoint& p : e.best) {
        if (p.color == color && (!seen || p.weight > heaviest)) {
          heaviest = p.weight;
          seen = true;
        }
      }
    }
    if (!seen) throw std::domain_error("f_C: color " + std::to_string(color) + " not covered");
    sum += heaviest;
  }
  return sum;
}

StreamingMaxCoverage::StreamingMaxCoverage(const Matchoid& mc, std::size_t z, Coloring h,
                                           std::function<double(PointId)> point_weight)
    : mc_(&mc),
      z_(z),
      zbar_(zbar(static_cast<std::uint32_t>(z))),
      h_(std::move(h)),
      point_weight_(std::move(point_weight)) {
  if (zbar_ > kMaxColors) throw std::invalid_argument("StreamingMaxCoverage: z too large");
  const std::uint32_t sets = (1u << zbar_) - 1;
  instances_.reserve(sets);
  for (std::uint32_t i = 0; i < sets; ++i) {
    instances_.push_back(std::make_unique<StreamingRepSet>(mc, z));
  }
}

void StreamingMaxCoverage::push(ElementId e, std::span<const PointId> points) {
  ColoredElement colored = color_element(e, points, point_weight_, h_);
  const std::uint32_t all = colored.colors().bits();
  ++stats_.arrivals;
  stats_.max_points_kept = std::max(stats_.max_points_kept, colored.best.size());
  // Non-empty submasks of the element's colors; C = {} carries no weight.
  for (std::uint32_t sub = all; sub != 0; sub = (sub - 1) & all) {
    StreamingRepSet& rs = *instances_[sub - 1];
    const StreamStep& step = rs.push(make_arrival(*mc_, e, w_C(colored, ColorSet(sub))));
    ++stats_.rep_set_pushes;
    stats_.independence_queries += step.independence_queries;
    stats_.max_rep_size = std::max(stats_.max_rep_size, step.rep_size);
  }
  colored_.push_back(std::move(colored));
}

ElementSet StreamingMaxCoverage::kernel() const {
  std::vector<ElementId> out;
  for (const auto& rs : instances_) {
    out.insert(out.end(), rs->current().begin(), rs->current().end());
  }
  return make_set(std::move(out));
}

const ElementSet& StreamingMaxCoverage::rep_set_for(ColorSet c) const {
  if (c.empty() || c.bits() > instances_.size()) {
    throw std::out_of_range("rep_set_for: no representative set for this color set");
  }
  return instances_[c.bits() - 1]->current();
}

std::uint64_t repetitions(std::uint32_t z, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("repetitions: eps must lie in (0, 1)");
  }
  const double u = std::ceil(std::exp(static_cast<double>(z)) * std::log(1.0 / eps));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(u));
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i) {
  std::uint64_t x = base + (i + 1) * 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

ColorCodingRun run_color_coding(const Matchoid& mc, const CoverageInstance& instance,
                                std::span<const ElementId> order, std::size_t z,
                                std::span<const HashFunction> family,
                                std::size_t parallel) {
  struct PassResult {
    ElementSet kernel;
    MaxCoverageStats stats;
  };
  std::vector<PassResult> passes(family.size());
  auto run_pass = [&](std::size_t i) {
    const HashFunction& h = family[i];
    StreamingMaxCoverage smc(
        mc, z, [&h](PointId p) { return h(p); },
        [&instance](PointId p) { return instance.weight(p); });
    for (ElementId e : order) smc.push(e, instance.points(e));
    passes[i] = PassResult{smc.kernel(), smc.stats()};
  };

  const std::size_t workers = std::min(std::max<std::size_t>(parallel, 1), family.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < family.size(); ++i) run_pass(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < family.size(); i = next++) run_pass(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : threads) t.join();
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  ColorCodingRun run;
  std::vector<ElementId> all;
  for (std::size_t i = 0; i < passes.size(); ++i) {
    all.insert(all.end(), passes[i].kernel.begin(), passes[i].kernel.end());
    run.seeds.push_back(family[i].seed());
    run.max_run_kernel = std::max(run.max_run_kernel, passes[i].kernel.size());
    run.max_rep_size = std::max(run.max_rep_size, passes[i].stats.max_rep_size);
    run.max_points_kept = std::max(run.max_points_kept, passes[i].stats.max_points_kept);
    run.independence_queries += passes[i].stats.independence_queries;
  }
  run.kernel = make_set(std::move(all));
  run.runs = passes.size();
  return run;
}

ColorCodingRun randomized_driver(const Matchoid& mc, const CoverageInstance& instance,
                                 std::span<const ElementId> order, std::size_t z,
                                 double eps, std::uint64_t seed, std::size_t parallel) {
  const std::uint64_t u = repetitions(static_cast<std::uint32_t>(z), eps);
  std::vector<HashFunction> family;
  family.reserve(u);
  for (std::uint64_t i = 0; i < u; ++i) {
    family.push_back(draw_hash(derive_seed(seed, i), static_cast<std::uint32_t>(z),
                               instance.num_points()));
  }
  return run_color_coding(mc, instance, order, z, family, parallel);
}

namespace {

void combinations(std::span<const PointId> pool, std::size_t size, std::size_t from,
                  std::vector<PointId>& current, std::vector<std::vector<PointId>>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    combinations(pool, size, i + 1, current, out);
    current.pop_back();
  }
}

bool injective_on(const HashFunction& h, std::span<const PointId> points) {
  std::uint32_t seen = 0;
  for (PointId p : points) {
    const std::uint32_t bit = 1u << h(p);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

}  // namespace

std::vector<HashFunction> perfect_family(std::uint32_t z, std::span<const PointId> points,
                                         std::uint64_t num_points,
                                         std::uint64_t first_seed) {
  std::vector<PointId> pool(points.begin(), points.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (z == 0 || z > 4) throw std::invalid_argument("perfect_family: z must be in [1, 4]");
  if (pool.size() > 30) throw std::invalid_argument("perfect_family: at most 30 points");

  const std::size_t size = std::min<std::size_t>(z, pool.size());
  if (size <= 1) return {draw_hash(first_seed, z, num_points)};

  std::vector<std::vector<PointId>> uncovered;
  std::vector<PointId> current;
  combinations(pool, size, 0, current, uncovered);

  const double e_z = std::exp(static_cast<double>(z));
  const auto cap = std::max<std::uint64_t>(
      16, static_cast<std::uint64_t>(
              std::ceil(10.0 * e_z * z * std::log(static_cast<double>(pool.size())))));
  std::vector<HashFunction> family;
  for (std::uint64_t i = 0; i < cap && !uncovered.empty(); ++i) {
    HashFunction h = draw_hash(first_seed + i, z, num_points);
    auto separated = std::partition(uncovered.begin(), uncovered.end(),
                                    [&](const auto& s) { return !injective_on(h, s); });
    if (separated == uncovered.end()) continue;
    uncovered.erase(separated, uncovered.end());
    family.push_back(std::move(h));
  }
  if (!uncovered.empty()) {
    std::string desc;
    for (PointId p : uncovered.front()) desc += (desc.empty() ? "" : ",") + std::to_string(p);
    throw FamilyError("perfect_family: subset {" + desc + "} not separated within " +
                          std::to_string(cap) + " seeds",
                      uncovered.front());
  }
  return family;
}

namespace {

struct WeightedSearch {
  std::span<const ElementId> pool;
  const Matchoid& mc;
  std::size_t z;
  const CoverageInstance& instance;
  std::vector<ElementId> current{};
  WeightedSolution best{};

  void run(std::size_t from) {
    if (current.size() == z) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      ElementSet s = make_set(current);
      if (mc.is_feasible(s)) {
        const double value = instance.top_weight(s, z);
        if (value > best.value) best = WeightedSolution{s, value};
        run(i + 1);
      }
      current.pop_back();
    }
  }
};

}  // namespace

WeightedSolution extract_weighted_solution(std::span<const ElementId> r,
                                           const Matchoid& mc, std::size_t z,
                                           const CoverageInstance& instance) {
  ElementSet pool = make_set(ElementSet(r.begin(), r.end()));
  WeightedSearch search{pool, mc, z, instance};
  search.run(0);
  return search.best;
}

}  // namespace repkernel
