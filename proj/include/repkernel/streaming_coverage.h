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

// Streaming kernel for unweighted coverage objectives available only through
// a value oracle.
//
// Elements with f(e) = j < z are organised in the j-th of z-1 trees. Every
// tree node holds z disjoint joint z-representative sets; all elements stored
// at a node cover the same points of the node's parent element and are
// otherwise pairwise disjoint. Point membership is never inspected directly:
// both structural tests are answered with value queries.
//
// This module depends only on value_oracle.h for the objective.

#ifndef REPKERNEL_STREAMING_COVERAGE_H_
#define REPKERNEL_STREAMING_COVERAGE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "repkernel/matchoid.h"
#include "repkernel/repset.h"
#include "repkernel/types.h"
#include "repkernel/value_oracle.h"

namespace repkernel {

// Parent of every root; covers nothing, so f(bottom) = 0.
inline constexpr ElementId kBottom = kNoElement;

// f(x | base) = f(base + x) - f(base), skipping kBottom and answering
// f(empty) = 0 without a query.
std::int64_t marginal(const ValueOracle& f, ElementId x, std::span<const ElementId> base);

// P(a) and P(b) meet P(x) in the same points: f(x|a) = f(x|b) = f(x|{a,b}).
// At most 6 queries; a == b answers true without querying.
bool same_points_within(const ValueOracle& f, ElementId a, ElementId b, ElementId x);

// P(a) \ P(x) and P(b) \ P(x) are disjoint: f(a|x) = f(a|{b,x}).
// At most 4 queries.
bool disjoint_outside(const ValueOracle& f, ElementId a, ElementId b, ElementId x);

struct TreeNode {
  ElementId parent_elem = kBottom;
  std::size_t depth = 0;
  std::vector<ElementSet> slots;
  // Children grouped by the owning element of this node, in creation order.
  std::map<ElementId, std::vector<std::unique_ptr<TreeNode>>> children;

  ElementSet all_reps() const;
  std::size_t node_count() const;  // this subtree
  void collect(std::vector<ElementId>& out) const;
};

struct CoverageContext {
  const Matchoid& matchoid;
  const ValueOracle& oracle;
  std::size_t z;
  // w(e) = -(arrival index): strictly decreasing in arrival order.
  const WeightFn& arrival_weights;
  // Test a candidate child against every stored element instead of one.
  bool literal_child_test = false;

  // Filled in while an arrival is handled.
  std::uint64_t query_budget = 0;  // 4 per descent test, 6 per child test
  std::uint64_t independence_queries = 0;
  bool created_node = false;
};

// Descends from n to the node that should process e; creates at most one
// new child.
TreeNode& find_node(CoverageContext& ctx, ElementId e, TreeNode& n);

// Tries to add e to R_1, ..., R_z of n in turn and stops at the first slot
// whose recomputed representative set keeps e. Returns that slot's index.
std::optional<std::size_t> process_elem(CoverageContext& ctx, ElementId e, TreeNode& n);

struct CoverageOptions {
  bool literal_child_test = false;
};

struct CoverageArrival {
  enum class Outcome { kEarlyExit, kStored, kBlocked, kNoPoints, kAfterExit };
  ElementId element{};
  Outcome outcome = Outcome::kBlocked;
  std::int64_t value = 0;  // f(e)
  std::size_t node_depth = 0;
  bool new_node = false;
  std::optional<std::size_t> slot;
  std::uint64_t value_queries = 0;        // measured on the oracle
  std::uint64_t value_query_budget = 0;   // 1 + the descent accounting
  std::uint64_t independence_queries = 0;
};

struct TreeStats {
  std::size_t nodes = 0;
  std::size_t elements = 0;
  std::size_t max_depth = 0;
};

class StreamingCoverage {
 public:
  // Throws std::invalid_argument for z < 1.
  StreamingCoverage(const Matchoid& mc, const ValueOracle& f, std::size_t z,
                    CoverageOptions options = {});

  // Throws StreamError on a repeated element.
  CoverageArrival push(ElementId e);

  bool finished_early() const { return early_.has_value(); }
  // {e} after an early exit, otherwise every element stored in any tree.
  ElementSet kernel() const;

  std::size_t z() const { return z_; }
  const Matchoid& matchoid() const { return *mc_; }
  // Root of the tree for value j, 1 <= j <= z-1.
  const TreeNode& root(std::size_t j) const { return *roots_.at(j - 1); }
  std::size_t tree_count() const { return roots_.size(); }
  TreeStats tree_stats(std::size_t j) const;
  const WeightFn& arrival_weights() const { return arrivals_; }

 private:
  const Matchoid* mc_;
  const ValueOracle* f_;
  std::size_t z_;
  CoverageOptions options_;
  std::vector<std::unique_ptr<TreeNode>> roots_;
  WeightFn arrivals_;
  std::optional<ElementId> early_;
};

// Exhaustive search of subsets of r with at most z elements for a feasible S
// with f(S) >= z.
std::optional<ElementSet> extract_coverage_solution(const ValueOracle& f,
                                                    std::span<const ElementId> r,
                                                    const Matchoid& mc, std::size_t z);

// Stored-element bound from the tree accounting:
// (z-1) * sum_{d=0}^{z-1} (2^{z-1} G z)^d * G z with G = gamma(l, z).
// Throws std::overflow_error when it does not fit in 64 bits.
std::uint64_t n_bound(std::uint64_t ell, std::uint64_t z);

// Worst-case value queries for one arrival: one for f(e) plus, on each of at
// most z levels, 4 per stored element and 6 per stored element of the
// children of one element.
std::uint64_t per_arrival_query_bound(std::uint64_t ell, std::uint64_t z);

}  // namespace repkernel

#endif  // REPKERNEL_STREAMING_COVERAGE_H_
