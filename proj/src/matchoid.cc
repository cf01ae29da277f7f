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

#include "repkernel/matchoid.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace repkernel {

Matchoid::Matchoid(std::vector<Matroid> matroids, ElementSet universe)
    : matroids_(std::move(matroids)),
      declared_(matroids_.size()),
      universe_(make_set(std::move(universe))) {
  for (ElementId e : universe_) incidence_[e];
  for (std::size_t i = 0; i < matroids_.size(); ++i) {
    for (ElementId e : matroids_[i].ground()) {
      auto it = incidence_.find(e);
      if (it == incidence_.end()) {
        throw std::invalid_argument("matroid " + std::to_string(i) + " ground element " +
                                    std::to_string(to_index(e)) +
                                    " is not in the universe");
      }
      it->second.push_back(i);
    }
  }
  ElementSet uncovered;
  for (ElementId e : universe_) {
    if (incidence_[e].empty()) uncovered.push_back(e);
  }
  if (!uncovered.empty()) {
    std::size_t free_index = matroids_.size();
    std::size_t rank = uncovered.size();
    for (ElementId e : uncovered) incidence_[e].push_back(free_index);
    matroids_.push_back(Matroid::uniform(std::move(uncovered), rank));
  }
  ell_ = 1;
  for (const auto& [e, list] : incidence_) ell_ = std::max(ell_, list.size());
  for (ElementId e : universe_) {
    const ElementId single[] = {e};
    for (std::size_t i : incidence_[e]) {
      if (!matroids_[i].evaluate(single)) {
        throw std::invalid_argument("element " + std::to_string(to_index(e)) +
                                    " is a loop of matroid " + std::to_string(i));
      }
    }
  }
}

std::span<const std::size_t> Matchoid::incidence(ElementId e) const {
  auto it = incidence_.find(e);
  if (it == incidence_.end()) {
    throw std::domain_error("element " + std::to_string(to_index(e)) +
                            " is not in the matchoid universe");
  }
  return it->second;
}

bool Matchoid::is_feasible(std::span<const ElementId> s) const {
  std::set<std::size_t> touched;
  for (ElementId e : s) {
    for (std::size_t i : incidence(e)) touched.insert(i);
  }
  for (std::size_t i : touched) {
    const Matroid& m = matroids_[i];
    ElementSet trace;
    for (ElementId e : s) {
      if (m.in_ground(e)) trace.push_back(e);
    }
    if (!m.is_independent(make_set(std::move(trace)))) return false;
  }
  return true;
}

std::uint64_t Matchoid::independence_queries() const {
  std::uint64_t total = 0;
  for (const Matroid& m : matroids_) total += m.queries();
  return total;
}

std::size_t matchoid_rank_upper(const Matchoid& mc) {
  const std::size_t n = mc.universe().size();
  std::size_t sum = 0;
  std::size_t best_single = n;
  for (const Matroid& m : mc.matroids()) {
    std::size_t r = rank(m, m.ground());
    sum += r;
    best_single = std::min(best_single, r + (n - m.ground().size()));
  }
  return std::min({n, sum, best_single});
}

}  // namespace repkernel
