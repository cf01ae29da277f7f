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

// Exhaustive ground-truth oracles. Everything here enumerates subsets
// directly, checks feasibility through the uncounted Matroid::evaluate()
// path and shares no search code with the algorithms it is used to audit.

#ifndef REPKERNEL_BRUTEFORCE_H_
#define REPKERNEL_BRUTEFORCE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "repkernel/colorcode.h"
#include "repkernel/coverage.h"
#include "repkernel/matchoid.h"
#include "repkernel/repset.h"
#include "repkernel/streaming_coverage.h"
#include "repkernel/types.h"

namespace repkernel {

struct BruteForceResult {
  double value = 0.0;
  ElementSet witness;
  std::uint64_t enumerated = 0;  // subsets examined
};

// Feasibility without touching the query counters.
bool feasible_uncounted(const Matchoid& mc, std::span<const ElementId> s);

// Maximum-weight feasible set with at most k elements. With pruning off every
// subset of size <= k is examined, so `enumerated` is sum_{j<=k} C(n, j).
// Throws std::length_error when |X| > 20.
BruteForceResult brute_max_weight_feasible(const Matchoid& mc, const WeightFn& w,
                                           std::size_t k, bool pruning = true);

// Maximum over all feasible S of the total weight of the z heaviest points
// covered by S. Throws std::length_error when |X| > 16.
BruteForceResult brute_max_coverage(const Matchoid& mc, const CoverageInstance& instance,
                                    std::size_t z);

struct RepSetCheck {
  bool ok = true;
  // First violation: a feasible B and some b in T and B with no usable
  // replacement in R.
  ElementSet b_set;
  ElementId b{};
  std::uint64_t pairs_checked = 0;
};

// Checks that R is a joint k-representative set for T: for every feasible B
// with |B| <= k and every b in T and B there is e in R with w(e) >= w(b) and
// B - b + e feasible. `strict` additionally requires e not in B - b. Throws
// std::length_error when |X| > 14.
RepSetCheck check_joint_rep_set(std::span<const ElementId> r, std::span<const ElementId> t,
                                const Matchoid& mc, const WeightFn& w, std::size_t k,
                                bool strict = false);

// True when h gives the points pairwise distinct colors.
bool check_well_colored(const Coloring& h, std::span<const PointId> points);

// The z heaviest points covered by s, ties to the smaller point id.
std::vector<PointId> heaviest_points(const CoverageInstance& instance,
                                     std::span<const ElementId> s, std::size_t z);

// Copy of the slot contents of every tree node, keyed by the node's path:
// tree index j, then (owner element, child index) per level.
using NodePath = std::vector<std::uint32_t>;
using TreeSnapshot = std::map<NodePath, std::vector<ElementSet>>;

TreeSnapshot snapshot_trees(const StreamingCoverage& sc);

// Inspects the point sets behind a StreamingCoverage run and returns one line
// per violated invariant: shared points with the parent element, disjointness
// outside it, disjoint slots, persistence against `previous`, value j in tree
// j, depth <= z-1, at most 2^{z-1} children per element, slot sizes <= gamma
// and no empty node.
std::vector<std::string> check_tree_invariants(const StreamingCoverage& sc,
                                               const CoverageInstance& instance,
                                               const TreeSnapshot* previous = nullptr);

}  // namespace repkernel

#endif  // REPKERNEL_BRUTEFORCE_H_
