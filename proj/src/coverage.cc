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

#include "repkernel/coverage.h"

#include <algorithm>
#include <functional>
#include <iterator>
#include <stdexcept>
#include <string>

namespace repkernel {

CoverageInstance::CoverageInstance(std::size_t num_points,
                                   std::unordered_map<ElementId, PointSet> pointsets,
                                   std::vector<double> point_weights)
    : num_points_(num_points),
      pointsets_(std::move(pointsets)),
      weights_(std::move(point_weights)) {
  if (!weights_.empty() && weights_.size() != num_points_) {
    throw std::invalid_argument("coverage: expected " + std::to_string(num_points_) +
                                " point weights, got " + std::to_string(weights_.size()));
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("coverage: negative point weight");
  }
  for (auto& [e, points] : pointsets_) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (!points.empty() && points.back() >= num_points_) {
      throw std::invalid_argument("coverage: element " + std::to_string(to_index(e)) +
                                  " covers point " + std::to_string(points.back()) +
                                  " outside the universe");
    }
  }
}

const PointSet& CoverageInstance::points(ElementId e) const {
  auto it = pointsets_.find(e);
  if (it == pointsets_.end()) {
    throw std::domain_error("no point set for element " + std::to_string(to_index(e)));
  }
  return it->second;
}

PointSet CoverageInstance::covered(std::span<const ElementId> s) const {
  PointSet out;
  for (ElementId e : s) {
    const PointSet& p = points(e);
    PointSet merged;
    std::set_union(out.begin(), out.end(), p.begin(), p.end(), std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

double CoverageInstance::top_weight(std::span<const ElementId> s, std::size_t z) const {
  std::vector<double> weights;
  for (PointId p : covered(s)) weights.push_back(weight(p));
  return heaviest_sum(std::move(weights), z);
}

double heaviest_sum(std::vector<double> weights, std::size_t z) {
  std::sort(weights.begin(), weights.end(), std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size() && i < z; ++i) sum += weights[i];
  return sum;
}

std::int64_t CoverageValueOracle::evaluate(std::span<const ElementId> s) const {
  return static_cast<std::int64_t>(instance_->covered(s).size());
}

}  // namespace repkernel
