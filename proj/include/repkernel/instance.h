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

// Problem instances: random generators, the independent-set encoding, and a
// versioned JSON file format shared by every CLI subcommand.
//
// File layout (all ids are integers, all weights decimal strings):
//
//   {
//     "format": "repkernel-instance", "version": 1,
//     "metadata": {"generator": "...", "seed": 1, "suggested_k": 2},
//     "num_points": 3, "point_weights": ["5", "3", "1"],
//     "elements": [{"id": 0, "weight": "2.5", "points": [0, 2]}, ...],
//     "matroids": [
//       {"kind": "uniform", "ground": [0, 1], "rank": 1},
//       {"kind": "partition", "blocks": [[0], [1, 2]], "capacities": [1, 1]},
//       {"kind": "graphic", "edges": [{"id": 0, "u": 0, "v": 1}]},
//       {"kind": "explicit", "ground": [0, 1], "independent": [[], [0], [1]]}
//     ],
//     "stream_order": [2, 0, 1]
//   }
//
// "point_weights", "points", "metadata" and "stream_order" are optional; a
// missing stream order means increasing id order.

#ifndef REPKERNEL_INSTANCE_H_
#define REPKERNEL_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "repkernel/coverage.h"
#include "repkernel/matchoid.h"
#include "repkernel/matroid.h"
#include "repkernel/repset.h"
#include "repkernel/types.h"

namespace repkernel {

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceElement {
  ElementId id{};
  double weight = 1.0;
  std::optional<PointSet> points;
  bool operator==(const InstanceElement&) const = default;
};

struct InstanceMetadata {
  std::string generator;
  std::uint64_t seed = 0;
  std::size_t suggested_k = 0;  // 0 when unset
  bool operator==(const InstanceMetadata&) const = default;
};

struct Instance {
  std::vector<InstanceElement> elements;  // increasing id
  std::vector<Matroid> matroids;
  std::vector<ElementId> stream_order;
  std::size_t num_points = 0;
  std::vector<double> point_weights;  // empty: every point weighs 1
  InstanceMetadata metadata;

  ElementSet ids() const;
  const InstanceElement& element(ElementId e) const;
  bool has_points() const;
};

bool same_instance(const Instance& a, const Instance& b);

// Throws InstanceError unless ids are unique, stream_order is a permutation
// of them, every ground lies inside them and points lie below num_points.
void validate(const Instance& inst);

Matchoid build_matchoid(const Instance& inst);
// Weights with arrival index = position in stream_order.
WeightFn build_weights(const Instance& inst);
// Throws InstanceError when some element has no point set.
CoverageInstance build_coverage(const Instance& inst);

enum class MatroidKind { kUniform, kPartition, kGraphic };

// n elements (ids 0..n-1) spread over s matroids so that each element lies in
// at most ell grounds; kinds are drawn from `kinds`, integer weights from
// 1..20 and the stream order is a random permutation. Throws
// std::invalid_argument unless 1 <= ell <= s and kinds is non-empty.
Instance gen_random_matchoid(std::size_t n, std::size_t s, std::size_t ell,
                             const std::vector<MatroidKind>& kinds, std::uint64_t seed);

// n elements over points 0..m-1, each covering 1..max_set random points, with
// no matroids. Weighted instances draw integer point weights from 1..10.
Instance gen_coverage(std::size_t n, std::size_t m, std::size_t max_set, bool weighted,
                      std::uint64_t seed);

// gen_random_matchoid(n, s, ell, kinds, seed) with the point sets of
// gen_coverage attached; every element weighs 1.
Instance gen_coverage(std::size_t n, std::size_t m, std::size_t max_set, bool weighted,
                      std::size_t s, std::size_t ell, const std::vector<MatroidKind>& kinds,
                      std::uint64_t seed);

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// One unit-weight element per vertex covering its own point, and one rank-1
// uniform matroid per edge. Throws std::invalid_argument for self-loops,
// repeated edges or out-of-range endpoints.
Instance encode_independent_set(const Graph& graph, std::size_t k);

Instance load_instance(std::istream& in);
Instance load_instance_file(const std::string& path);
void save_instance(std::ostream& out, const Instance& inst);
void save_instance_file(const std::string& path, const Instance& inst);

// Shortest decimal string that reads back to exactly w, and its inverse.
std::string format_weight(double w);
double parse_weight(const std::string& s);

}  // namespace repkernel

#endif  // REPKERNEL_INSTANCE_H_
