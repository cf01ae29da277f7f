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

// Joint k-representative sets over an l-matchoid and the offline kernel for
// maximum-weight feasible sets.

#ifndef REPKERNEL_REPSET_H_
#define REPKERNEL_REPSET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "repkernel/matchoid.h"
#include "repkernel/types.h"

namespace repkernel {

// Element weights with a strict priority order: heavier first, and among
// equal weights the earlier arrival first.
class WeightFn {
 public:
  // Throws std::invalid_argument if e or the arrival index is already taken.
  void set(ElementId e, double weight, std::uint64_t arrival);
  // Appends e with the next free arrival index.
  void append(ElementId e, double weight);

  bool has(ElementId e) const { return entries_.contains(e); }
  double weight(ElementId e) const;
  std::uint64_t arrival(ElementId e) const;
  std::size_t size() const { return entries_.size(); }

  // True when a strictly precedes b.
  bool prefers(ElementId a, ElementId b) const;
  void sort_by_priority(std::vector<ElementId>& elements) const;
  double total(std::span<const ElementId> s) const;

 private:
  struct Entry {
    double weight;
    std::uint64_t arrival;
  };
  const Entry& entry(ElementId e) const;

  std::unordered_map<ElementId, Entry> entries_;
  std::unordered_map<std::uint64_t, ElementId> by_arrival_;
  std::uint64_t next_arrival_ = 0;
};

// The s-tuple (J_1, ..., J_s) threaded through the recursion, with each J_i
// independent in M_i.
class MultiDimSet {
 public:
  explicit MultiDimSet(std::size_t s) : parts_(s) {}

  std::size_t norm() const { return norm_; }
  std::size_t dimension() const { return parts_.size(); }
  const ElementSet& part(std::size_t i) const { return parts_[i]; }
  void add(std::size_t i, ElementId e);
  void remove(std::size_t i, ElementId e);

 private:
  std::vector<ElementSet> parts_;
  std::size_t norm_ = 0;
};

struct RepSetStats {
  std::uint64_t calls = 0;                // nodes of the recursion tree
  std::uint64_t independence_queries = 0;
  std::size_t max_norm = 0;               // largest ||J|| seen at any call
  std::size_t max_children = 0;           // most recursive calls made by one call
};

struct GuessContext {
  const Matchoid& matchoid;
  const WeightFn& weights;
  std::size_t k;
  RepSetStats stats{};
  // When set, every call re-verifies that each J_i is independent (through
  // the uncounted oracle path) and throws std::logic_error otherwise.
  bool check_invariants = false;
};

// One call of the recursion on (J, Y). `candidates` must be ordered by
// priority (see WeightFn::sort_by_priority). Returns the elements selected in
// this call and all of its descendants. J is restored before returning.
ElementSet guess(MultiDimSet& j, std::span<const ElementId> candidates,
                 GuessContext& ctx);

struct RepSetResult {
  ElementSet reps;
  RepSetStats stats;
};

// Joint k-representative set for (T, mc, w). Throws std::invalid_argument for
// k < 1 and std::domain_error for elements outside the universe or without a
// weight.
RepSetResult rep_set(std::span<const ElementId> t, const Matchoid& mc,
                     const WeightFn& w, std::size_t k,
                     bool check_invariants = false);

// sum_{q=0}^{(k-1) l} l^q. Throws std::overflow_error when the value does not
// fit in 64 bits and std::invalid_argument for zero arguments.
std::uint64_t gamma(std::uint64_t ell, std::uint64_t k);

struct KernelResult {
  ElementSet kernel;
  ElementSet solution;
  double value = 0.0;
  RepSetStats stats;
  std::uint64_t extraction_checks = 0;  // feasibility checks during extraction
};

// Kernel = rep_set(universe); the solution is a maximum-weight feasible
// subset of the kernel with at most k elements, found exhaustively.
KernelResult kernel_max_weight(const Matchoid& mc, const WeightFn& w, std::size_t k);

// Exhaustive search over subsets of `candidates` with at most max_size
// elements, pruning infeasible branches. Returns the maximum-weight feasible
// subset; ties go to the first found in priority order.
ElementSet best_weight_subset(std::span<const ElementId> candidates, const Matchoid& mc,
                              const WeightFn& w, std::size_t max_size,
                              std::uint64_t* checks = nullptr);

}  // namespace repkernel

#endif  // REPKERNEL_REPSET_H_
