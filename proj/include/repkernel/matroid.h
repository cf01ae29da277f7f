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

// Matroids accessed through an independence oracle.
//
// Four concrete families are supported: uniform, partition, graphic and
// explicit (a listed family of independent sets). Every oracle call through
// is_independent() increments a per-matroid counter; complexity bounds are
// stated in those units.

#ifndef REPKERNEL_MATROID_H_
#define REPKERNEL_MATROID_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "repkernel/types.h"

namespace repkernel {

class Matroid {
 public:
  struct Uniform {
    std::size_t rank = 0;
    bool operator==(const Uniform&) const = default;
  };
  struct Partition {
    std::vector<ElementSet> blocks;
    std::vector<std::size_t> capacities;
    bool operator==(const Partition&) const = default;
  };
  struct Graphic {
    // Element -> (u, v) endpoints. Parallel edges are allowed, self-loops are
    // not (they would be matroid loops).
    std::map<ElementId, std::pair<std::uint32_t, std::uint32_t>> edges;
    bool operator==(const Graphic&) const = default;
  };
  struct Explicit {
    std::set<ElementSet> independent;
    bool operator==(const Explicit&) const = default;
  };
  using Kind = std::variant<Uniform, Partition, Graphic, Explicit>;

  // Factories validate the descriptor and throw std::invalid_argument on a
  // malformed one, including any descriptor that has a loop.
  static Matroid uniform(ElementSet ground, std::size_t rank);
  static Matroid partition(std::vector<ElementSet> blocks,
                           std::vector<std::size_t> capacities);
  static Matroid graphic(
      std::map<ElementId, std::pair<std::uint32_t, std::uint32_t>> edges);
  static Matroid explicit_family(ElementSet ground,
                                 std::vector<ElementSet> independent);

  Matroid(const Matroid& other);
  Matroid(Matroid&& other) noexcept;
  Matroid& operator=(const Matroid& other);
  Matroid& operator=(Matroid&& other) noexcept;

  const ElementSet& ground() const { return ground_; }
  const Kind& kind() const { return kind_; }
  std::string kind_name() const;
  bool in_ground(ElementId e) const { return contains(ground_, e); }

  // Throws std::domain_error when s is not a subset of ground(). Counts one
  // query per call.
  bool is_independent(std::span<const ElementId> s) const;

  std::uint64_t queries() const {
    return queries_.load(std::memory_order_relaxed);
  }

  // Same answer as is_independent() but neither validated nor counted. Used
  // for load-time checks and by verification code.
  bool evaluate(std::span<const ElementId> s) const;

  // Exhaustively checks the matroid axioms over the ground set. Returns an
  // empty string on success or a description of the first violation.
  // Requires |ground| <= 16.
  std::string check_axioms() const;

  bool same_structure(const Matroid& other) const {
    return ground_ == other.ground_ && kind_ == other.kind_;
  }

 private:
  Matroid(ElementSet ground, Kind kind);
  void index();

  ElementSet ground_;
  Kind kind_;
  std::unordered_map<ElementId, std::size_t> block_of_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

// Size of a largest independent subset of s, computed greedily.
std::size_t rank(const Matroid& m, std::span<const ElementId> s);

// span_M(T) for independent T: T plus every ground element whose addition
// makes T dependent. Throws std::invalid_argument if T is dependent.
ElementSet span_of(const Matroid& m, std::span<const ElementId> t);

// The members of `candidates` lying in span_M(T). Costs one query per
// candidate in the ground set and outside T. T must be independent; this is
// not re-checked.
ElementSet span_within(const Matroid& m, std::span<const ElementId> t,
                       std::span<const ElementId> candidates,
                       std::uint64_t* queries = nullptr);

}  // namespace repkernel

#endif  // REPKERNEL_MATROID_H_
