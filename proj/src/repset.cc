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

#include "repkernel/repset.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace repkernel {

void WeightFn::set(ElementId e, double weight, std::uint64_t arrival) {
  if (entries_.contains(e)) {
    throw std::invalid_argument("weight already assigned to element " +
                                std::to_string(to_index(e)));
  }
  if (by_arrival_.contains(arrival)) {
    throw std::invalid_argument("arrival index " + std::to_string(arrival) +
                                " used twice");
  }
  entries_.emplace(e, Entry{weight, arrival});
  by_arrival_.emplace(arrival, e);
  next_arrival_ = std::max(next_arrival_, arrival + 1);
}

void WeightFn::append(ElementId e, double weight) { set(e, weight, next_arrival_); }

const WeightFn::Entry& WeightFn::entry(ElementId e) const {
  auto it = entries_.find(e);
  if (it == entries_.end()) {
    throw std::domain_error("no weight for element " + std::to_string(to_index(e)));
  }
  return it->second;
}

double WeightFn::weight(ElementId e) const { return entry(e).weight; }
std::uint64_t WeightFn::arrival(ElementId e) const { return entry(e).arrival; }

bool WeightFn::prefers(ElementId a, ElementId b) const {
  const Entry& x = entry(a);
  const Entry& y = entry(b);
  if (x.weight != y.weight) return x.weight > y.weight;
  return x.arrival < y.arrival;
}

void WeightFn::sort_by_priority(std::vector<ElementId>& elements) const {
  std::sort(elements.begin(), elements.end(),
            [this](ElementId a, ElementId b) { return prefers(a, b); });
}

double WeightFn::total(std::span<const ElementId> s) const {
  double sum = 0.0;
  for (ElementId e : s) sum += weight(e);
  return sum;
}

void MultiDimSet::add(std::size_t i, ElementId e) {
  std::size_t before = parts_.at(i).size();
  parts_[i] = with_element(parts_[i], e);
  norm_ += parts_[i].size() - before;
}

void MultiDimSet::remove(std::size_t i, ElementId e) {
  std::size_t before = parts_.at(i).size();
  parts_[i] = without_element(parts_[i], e);
  norm_ -= before - parts_[i].size();
}

namespace {

void guess_into(MultiDimSet& j, std::span<const ElementId> y, GuessContext& ctx,
                std::vector<ElementId>& out) {
  ++ctx.stats.calls;
  ctx.stats.max_norm = std::max(ctx.stats.max_norm, j.norm());
  if (ctx.check_invariants) {
    for (std::size_t i = 0; i < j.dimension(); ++i) {
      if (!ctx.matchoid.matroid(i).evaluate(j.part(i))) {
        throw std::logic_error("guess: J_" + std::to_string(i) + " = " +
                               to_string(j.part(i)) + " is dependent");
      }
    }
  }
  if (y.empty()) return;
  const ElementId e = y.front();
  out.push_back(e);
  if (j.norm() >= (ctx.k - 1) * ctx.matchoid.ell()) return;

  std::size_t children = 0;
  for (std::size_t i : ctx.matchoid.incidence(e)) {
    const Matroid& m = ctx.matchoid.matroid(i);
    const ElementSet base = with_element(j.part(i), e);
    // Y_i = Y \ span_{M_i}(J_i + e)
    std::vector<ElementId> next;
    next.reserve(y.size());
    for (ElementId x : y) {
      if (x == e) continue;
      if (!m.in_ground(x)) {
        next.push_back(x);
        continue;
      }
      ++ctx.stats.independence_queries;
      if (m.is_independent(with_element(base, x))) next.push_back(x);
    }
    j.add(i, e);
    ++children;
    guess_into(j, next, ctx, out);
    j.remove(i, e);
  }
  ctx.stats.max_children = std::max(ctx.stats.max_children, children);
}

}  // namespace

ElementSet guess(MultiDimSet& j, std::span<const ElementId> candidates,
                 GuessContext& ctx) {
  std::vector<ElementId> out;
  guess_into(j, candidates, ctx, out);
  return make_set(std::move(out));
}

RepSetResult rep_set(std::span<const ElementId> t, const Matchoid& mc,
                     const WeightFn& w, std::size_t k, bool check_invariants) {
  if (k < 1) throw std::invalid_argument("rep_set: k must be at least 1");
  std::vector<ElementId> ordered = make_set(ElementSet(t.begin(), t.end()));
  for (ElementId e : ordered) {
    mc.incidence(e);
    w.weight(e);
  }
  w.sort_by_priority(ordered);
  GuessContext ctx{mc, w, k};
  ctx.check_invariants = check_invariants;
  MultiDimSet j(mc.size());
  ElementSet reps = guess(j, ordered, ctx);
  return RepSetResult{std::move(reps), ctx.stats};
}

std::uint64_t gamma(std::uint64_t ell, std::uint64_t k) {
  if (ell == 0 || k == 0) throw std::invalid_argument("gamma: ell and k must be positive");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (k - 1 > kMax / ell) throw std::overflow_error("gamma: exponent overflow");
  const std::uint64_t top = (k - 1) * ell;
  if (ell == 1) {
    if (top == kMax) throw std::overflow_error("gamma: value overflow");
    return top + 1;
  }
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  for (std::uint64_t q = 0; q <= top; ++q) {
    if (sum > kMax - power) throw std::overflow_error("gamma: value overflow");
    sum += power;
    if (q < top) {
      if (power > kMax / ell) throw std::overflow_error("gamma: value overflow");
      power *= ell;
    }
  }
  return sum;
}

namespace {

struct SubsetSearch {
  std::span<const ElementId> order;
  const Matchoid& mc;
  const WeightFn& w;
  std::size_t max_size;
  std::uint64_t checks = 0;
  std::vector<ElementId> current{};
  ElementSet best{};
  double best_value = 0.0;

  void run(std::size_t from) {
    if (current.size() == max_size) return;
    for (std::size_t i = from; i < order.size(); ++i) {
      current.push_back(order[i]);
      ++checks;
      if (mc.is_feasible(make_set(current))) {
        const double value = w.total(current);
        if (value > best_value) {
          best_value = value;
          best = make_set(current);
        }
        run(i + 1);
      }
      current.pop_back();
    }
  }
};

}  // namespace

ElementSet best_weight_subset(std::span<const ElementId> candidates, const Matchoid& mc,
                              const WeightFn& w, std::size_t max_size,
                              std::uint64_t* checks) {
  std::vector<ElementId> order(candidates.begin(), candidates.end());
  w.sort_by_priority(order);
  SubsetSearch search{order, mc, w, max_size};
  search.run(0);
  if (checks != nullptr) *checks += search.checks;
  return search.best;
}

KernelResult kernel_max_weight(const Matchoid& mc, const WeightFn& w, std::size_t k) {
  KernelResult result;
  RepSetResult reps = rep_set(mc.universe(), mc, w, k);
  result.kernel = std::move(reps.reps);
  result.stats = reps.stats;
  result.solution = best_weight_subset(result.kernel, mc, w, k, &result.extraction_checks);
  result.value = w.total(result.solution);
  return result;
}

}  // namespace repkernel
