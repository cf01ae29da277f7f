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

#include "repkernel/streaming_coverage.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "repkernel/stream.h"

namespace repkernel {
namespace {

std::int64_t value_of(const ValueOracle& f, std::vector<ElementId> s) {
  std::erase(s, kBottom);
  s = make_set(std::move(s));
  if (s.empty()) return 0;
  return f.value(s);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("coverage bound overflows 64 bits");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw std::overflow_error("coverage bound overflows 64 bits");
  }
  return a + b;
}

std::vector<ElementId> reps_in_arrival_order(const TreeNode& n, const WeightFn& w) {
  std::vector<ElementId> reps = n.all_reps();
  w.sort_by_priority(reps);
  return reps;
}

}  // namespace

std::int64_t marginal(const ValueOracle& f, ElementId x, std::span<const ElementId> base) {
  std::vector<ElementId> with(base.begin(), base.end());
  with.push_back(x);
  return value_of(f, std::move(with)) -
         value_of(f, std::vector<ElementId>(base.begin(), base.end()));
}

bool same_points_within(const ValueOracle& f, ElementId a, ElementId b, ElementId x) {
  if (a == b) return true;
  const ElementId just_a[] = {a};
  const ElementId just_b[] = {b};
  const ElementId both[] = {a, b};
  const std::int64_t via_a = marginal(f, x, just_a);
  const std::int64_t via_b = marginal(f, x, just_b);
  if (via_a != via_b) return false;
  return via_a == marginal(f, x, both);
}

bool disjoint_outside(const ValueOracle& f, ElementId a, ElementId b, ElementId x) {
  const ElementId just_x[] = {x};
  const ElementId b_and_x[] = {b, x};
  return marginal(f, a, just_x) == marginal(f, a, b_and_x);
}

ElementSet TreeNode::all_reps() const {
  std::vector<ElementId> out;
  for (const ElementSet& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  return make_set(std::move(out));
}

std::size_t TreeNode::node_count() const {
  std::size_t count = 1;
  for (const auto& [owner, list] : children) {
    for (const auto& child : list) count += child->node_count();
  }
  return count;
}

void TreeNode::collect(std::vector<ElementId>& out) const {
  for (const ElementSet& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  for (const auto& [owner, list] : children) {
    for (const auto& child : list) child->collect(out);
  }
}

TreeNode& find_node(CoverageContext& ctx, ElementId e, TreeNode& n) {
  const ElementId p = n.parent_elem;
  for (ElementId r : reps_in_arrival_order(n, ctx.arrival_weights)) {
    ctx.query_budget += 4;
    // P(e) \ P(p) and P(r) \ P(p) intersect.
    if (disjoint_outside(ctx.oracle, e, r, p)) continue;

    auto owned = n.children.find(r);
    if (owned != n.children.end()) {
      for (const auto& child : owned->second) {
        const std::vector<ElementId> stored =
            reps_in_arrival_order(*child, ctx.arrival_weights);
        if (stored.empty()) throw std::logic_error("find_node: child node without elements");
        bool match = true;
        if (ctx.literal_child_test) {
          for (ElementId other : stored) {
            ctx.query_budget += 6;
            if (!same_points_within(ctx.oracle, other, e, r)) {
              match = false;
              break;
            }
          }
        } else {
          // Stored elements agree on P(r), so one of them decides.
          ctx.query_budget += 6;
          match = same_points_within(ctx.oracle, stored.front(), e, r);
        }
        if (match) return find_node(ctx, e, *child);
      }
    }
    auto fresh = std::make_unique<TreeNode>();
    fresh->parent_elem = r;
    fresh->depth = n.depth + 1;
    fresh->slots.resize(ctx.z);
    auto& list = n.children[r];
    list.push_back(std::move(fresh));
    ctx.created_node = true;
    return *list.back();
  }
  return n;
}

std::optional<std::size_t> process_elem(CoverageContext& ctx, ElementId e, TreeNode& n) {
  for (std::size_t j = 0; j < n.slots.size(); ++j) {
    RepSetResult next =
        rep_set(with_element(n.slots[j], e), ctx.matchoid, ctx.arrival_weights, ctx.z);
    ctx.independence_queries += next.stats.independence_queries;
    if (contains(next.reps, e)) {
      n.slots[j] = std::move(next.reps);
      return j;
    }
  }
  return std::nullopt;
}

StreamingCoverage::StreamingCoverage(const Matchoid& mc, const ValueOracle& f,
                                     std::size_t z, CoverageOptions options)
    : mc_(&mc), f_(&f), z_(z), options_(options) {
  if (z < 1) throw std::invalid_argument("StreamingCoverage: z must be at least 1");
  for (std::size_t j = 1; j < z; ++j) {
    auto root = std::make_unique<TreeNode>();
    root->slots.resize(z);
    roots_.push_back(std::move(root));
  }
}

CoverageArrival StreamingCoverage::push(ElementId e) {
  if (arrivals_.has(e)) {
    throw StreamError("element " + std::to_string(to_index(e)) + " arrived twice");
  }
  mc_->incidence(e);
  const auto arrival = static_cast<std::int64_t>(arrivals_.size());
  arrivals_.append(e, -static_cast<double>(arrival));

  CoverageArrival result;
  result.element = e;
  if (early_) {
    result.outcome = CoverageArrival::Outcome::kAfterExit;
    return result;
  }
  const std::uint64_t before = f_->queries();
  const ElementId single[] = {e};
  result.value = f_->value(single);
  result.value_query_budget = 1;
  if (result.value >= static_cast<std::int64_t>(z_)) {
    early_ = e;
    result.outcome = CoverageArrival::Outcome::kEarlyExit;
    result.value_queries = f_->queries() - before;
    return result;
  }
  if (result.value <= 0) {
    result.outcome = CoverageArrival::Outcome::kNoPoints;
    result.value_queries = f_->queries() - before;
    return result;
  }

  CoverageContext ctx{*mc_, *f_, z_, arrivals_};
  ctx.literal_child_test = options_.literal_child_test;
  TreeNode& node = find_node(ctx, e, *roots_[result.value - 1]);
  result.node_depth = node.depth;
  result.new_node = ctx.created_node;
  result.slot = process_elem(ctx, e, node);
  if (ctx.created_node && result.slot != std::size_t{0}) {
    throw std::logic_error("streaming coverage: new node did not keep its first element");
  }
  result.outcome = result.slot ? CoverageArrival::Outcome::kStored
                               : CoverageArrival::Outcome::kBlocked;
  result.value_queries = f_->queries() - before;
  result.value_query_budget += ctx.query_budget;
  result.independence_queries = ctx.independence_queries;
  return result;
}

ElementSet StreamingCoverage::kernel() const {
  if (early_) return ElementSet{*early_};
  std::vector<ElementId> out;
  for (const auto& root : roots_) root->collect(out);
  return make_set(std::move(out));
}

TreeStats StreamingCoverage::tree_stats(std::size_t j) const {
  TreeStats stats;
  std::vector<const TreeNode*> stack{&root(j)};
  while (!stack.empty()) {
    const TreeNode* n = stack.back();
    stack.pop_back();
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, n->depth);
    for (const ElementSet& slot : n->slots) stats.elements += slot.size();
    for (const auto& [owner, list] : n->children) {
      for (const auto& child : list) stack.push_back(child.get());
    }
  }
  return stats;
}

namespace {

struct CoverageSearch {
  const ValueOracle& f;
  std::span<const ElementId> pool;
  const Matchoid& mc;
  std::size_t z;
  std::vector<ElementId> current{};
  std::optional<ElementSet> found{};

  void run(std::size_t from) {
    if (found || current.size() == z) return;
    for (std::size_t i = from; i < pool.size() && !found; ++i) {
      current.push_back(pool[i]);
      ElementSet s = make_set(current);
      if (mc.is_feasible(s)) {
        if (f.value(s) >= static_cast<std::int64_t>(z)) {
          found = std::move(s);
        } else {
          run(i + 1);
        }
      }
      current.pop_back();
    }
  }
};

}  // namespace

std::optional<ElementSet> extract_coverage_solution(const ValueOracle& f,
                                                    std::span<const ElementId> r,
                                                    const Matchoid& mc, std::size_t z) {
  ElementSet pool = make_set(ElementSet(r.begin(), r.end()));
  CoverageSearch search{f, pool, mc, z};
  search.run(0);
  return search.found;
}

std::uint64_t n_bound(std::uint64_t ell, std::uint64_t z) {
  if (ell == 0 || z == 0) throw std::invalid_argument("n_bound: ell and z must be positive");
  if (z == 1) return 0;
  const std::uint64_t per_node = checked_mul(gamma(ell, z), z);
  if (z - 1 >= 64) throw std::overflow_error("coverage bound overflows 64 bits");
  const std::uint64_t branching = checked_mul(std::uint64_t{1} << (z - 1), per_node);
  std::uint64_t nodes = 0;
  std::uint64_t level = 1;
  for (std::uint64_t d = 0; d < z; ++d) {
    nodes = checked_add(nodes, level);
    if (d + 1 < z) level = checked_mul(level, branching);
  }
  return checked_mul(checked_mul(z - 1, nodes), per_node);
}

std::uint64_t per_arrival_query_bound(std::uint64_t ell, std::uint64_t z) {
  if (z - 1 >= 64) throw std::overflow_error("coverage bound overflows 64 bits");
  const std::uint64_t per_node = checked_mul(gamma(ell, z), z);
  const std::uint64_t child_tests =
      checked_mul(6, checked_mul(std::uint64_t{1} << (z - 1), per_node));
  return checked_add(1, checked_mul(z, checked_add(checked_mul(4, per_node), child_tests)));
}

}  // namespace repkernel
