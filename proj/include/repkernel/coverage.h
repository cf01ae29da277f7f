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

// Explicit coverage data: a point set P(e) for every element and a weight for
// every point, plus a value oracle that answers |P(S)| from it.

#ifndef REPKERNEL_COVERAGE_H_
#define REPKERNEL_COVERAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "repkernel/types.h"
#include "repkernel/value_oracle.h"

namespace repkernel {

using PointId = std::uint32_t;
using PointSet = std::vector<PointId>;  // sorted, no duplicates

class CoverageInstance {
 public:
  CoverageInstance() = default;
  // Points are 0..num_points-1. Empty point_weights means every point weighs 1.
  // Throws std::invalid_argument for out-of-range points or negative weights.
  CoverageInstance(std::size_t num_points,
                   std::unordered_map<ElementId, PointSet> pointsets,
                   std::vector<double> point_weights = {});

  std::size_t num_points() const { return num_points_; }
  const PointSet& points(ElementId e) const;
  bool has(ElementId e) const { return pointsets_.contains(e); }
  double weight(PointId p) const { return weights_.empty() ? 1.0 : weights_.at(p); }
  bool unweighted() const { return weights_.empty(); }
  const std::vector<double>& point_weights() const { return weights_; }

  PointSet covered(std::span<const ElementId> s) const;
  // Total weight of the z heaviest covered points.
  double top_weight(std::span<const ElementId> s, std::size_t z) const;

 private:
  std::size_t num_points_ = 0;
  std::unordered_map<ElementId, PointSet> pointsets_;
  std::vector<double> weights_;
};

// f(S) = |P(S)|.
class CoverageValueOracle final : public ValueOracle {
 public:
  explicit CoverageValueOracle(const CoverageInstance& instance) : instance_(&instance) {}

 protected:
  std::int64_t evaluate(std::span<const ElementId> s) const override;

 private:
  const CoverageInstance* instance_;
};

// Weights of a set of points in descending order, heaviest z summed.
double heaviest_sum(std::vector<double> weights, std::size_t z);

}  // namespace repkernel

#endif  // REPKERNEL_COVERAGE_H_
