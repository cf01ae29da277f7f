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

// An l-matchoid: matroids on overlapping ground subsets of a universe, where
// each element lies in at most l of the grounds. A set is feasible when its
// trace on every ground is independent.

#ifndef REPKERNEL_MATCHOID_H_
#define REPKERNEL_MATCHOID_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "repkernel/matroid.h"
#include "repkernel/types.h"

namespace repkernel {

class Matchoid {
 public:
  // Builds the incidence map X(e). Elements of `universe` that no matroid
  // covers are collected into one extra free matroid (uniform of full rank)
  // appended after the given ones, so every element has X(e) non-empty.
  // Throws std::invalid_argument when a ground leaves the universe or a
  // singleton is dependent (a loop).
  Matchoid(std::vector<Matroid> matroids, ElementSet universe);

  std::size_t size() const { return matroids_.size(); }
  // Number of matroids supplied by the caller, i.e. excluding the free one.
  std::size_t declared_size() const { return declared_; }
  std::size_t ell() const { return ell_; }
  const ElementSet& universe() const { return universe_; }
  const Matroid& matroid(std::size_t i) const { return matroids_[i]; }
  std::span<const Matroid> matroids() const { return matroids_; }

  // Indices of the matroids whose ground contains e, ascending.
  // Throws std::domain_error for elements outside the universe.
  std::span<const std::size_t> incidence(ElementId e) const;

  bool is_feasible(std::span<const ElementId> s) const;

  // Sum of the matroids' query counters.
  std::uint64_t independence_queries() const;

 private:
  std::vector<Matroid> matroids_;
  std::size_t declared_ = 0;
  ElementSet universe_;
  std::unordered_map<ElementId, std::vector<std::size_t>> incidence_;
  std::size_t ell_ = 1;
};

// Upper bound on the largest feasible set (not the exact matchoid rank):
// min(|X|, sum_i rank(M_i), min_i rank(M_i) + |X \ X_i|).
std::size_t matchoid_rank_upper(const Matchoid& mc);

}  // namespace repkernel

#endif  // REPKERNEL_MATCHOID_H_
