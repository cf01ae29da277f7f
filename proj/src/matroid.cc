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

#include "repkernel/matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace repkernel {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Union-find over the vertices touched by one query. Rebuilt per call.
class VertexForest {
 public:
  std::size_t find(std::uint32_t v) {
    auto [it, inserted] = slot_.try_emplace(v, parent_.size());
    if (inserted) parent_.push_back(it->second);
    std::size_t x = it->second;
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False when u and v were already connected.
  bool unite(std::uint32_t u, std::uint32_t v) {
    std::size_t a = find(u);
    std::size_t b = find(v);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::unordered_map<std::uint32_t, std::size_t> slot_;
  std::vector<std::size_t> parent_;
};

}  // namespace

Matroid::Matroid(ElementSet ground, Kind kind)
    : ground_(std::move(ground)), kind_(std::move(kind)) {
  index();
}

Matroid::Matroid(const Matroid& other)
    : ground_(other.ground_),
      kind_(other.kind_),
      block_of_(other.block_of_),
      queries_(other.queries()) {}

Matroid::Matroid(Matroid&& other) noexcept
    : ground_(std::move(other.ground_)),
      kind_(std::move(other.kind_)),
      block_of_(std::move(other.block_of_)),
      queries_(other.queries()) {}

Matroid& Matroid::operator=(const Matroid& other) {
  if (this != &other) {
    ground_ = other.ground_;
    kind_ = other.kind_;
    block_of_ = other.block_of_;
    queries_.store(other.queries(), std::memory_order_relaxed);
  }
  return *this;
}

Matroid& Matroid::operator=(Matroid&& other) noexcept {
  ground_ = std::move(other.ground_);
  kind_ = std::move(other.kind_);
  block_of_ = std::move(other.block_of_);
  queries_.store(other.queries(), std::memory_order_relaxed);
  return *this;
}

void Matroid::index() {
  block_of_.clear();
  if (const auto* p = std::get_if<Partition>(&kind_)) {
    for (std::size_t b = 0; b < p->blocks.size(); ++b) {
      for (ElementId e : p->blocks[b]) block_of_[e] = b;
    }
  }
}

Matroid Matroid::uniform(ElementSet ground, std::size_t rank) {
  ground = make_set(std::move(ground));
  if (rank == 0 && !ground.empty()) {
    throw std::invalid_argument("uniform matroid of rank 0 consists of loops");
  }
  return Matroid(std::move(ground), Uniform{rank});
}

Matroid Matroid::partition(std::vector<ElementSet> blocks,
                           std::vector<std::size_t> capacities) {
  if (blocks.size() != capacities.size()) {
    throw std::invalid_argument("partition matroid: blocks/capacities size mismatch");
  }
  std::vector<ElementId> all;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] = make_set(std::move(blocks[b]));
    if (capacities[b] == 0 && !blocks[b].empty()) {
      throw std::invalid_argument("partition matroid: capacity 0 block consists of loops");
    }
    all.insert(all.end(), blocks[b].begin(), blocks[b].end());
  }
  std::size_t total = all.size();
  ElementSet ground = make_set(std::move(all));
  if (ground.size() != total) {
    throw std::invalid_argument("partition matroid: blocks overlap");
  }
  return Matroid(std::move(ground), Partition{std::move(blocks), std::move(capacities)});
}

Matroid Matroid::graphic(
    std::map<ElementId, std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<ElementId> ground;
  ground.reserve(edges.size());
  for (const auto& [e, uv] : edges) {
    if (uv.first == uv.second) {
      std::ostringstream os;
      os << "graphic matroid: edge " << to_index(e) << " is a self-loop";
      throw std::invalid_argument(os.str());
    }
    ground.push_back(e);
  }
  return Matroid(make_set(std::move(ground)), Graphic{std::move(edges)});
}

Matroid Matroid::explicit_family(ElementSet ground,
                                 std::vector<ElementSet> independent) {
  ground = make_set(std::move(ground));
  Explicit family;
  family.independent.insert(ElementSet{});
  for (ElementSet& s : independent) {
    s = make_set(std::move(s));
    if (!is_subset(s, ground)) {
      throw std::invalid_argument("explicit matroid: independent set " +
                                  to_string(s) + " leaves the ground set");
    }
    family.independent.insert(std::move(s));
  }
  for (ElementId e : ground) {
    if (!family.independent.contains(ElementSet{e})) {
      throw std::invalid_argument("explicit matroid: element " +
                                  std::to_string(to_index(e)) + " is a loop");
    }
  }
  Matroid m(std::move(ground), std::move(family));
  if (m.ground().size() <= 12) {
    std::string violation = m.check_axioms();
    if (!violation.empty()) {
      throw std::invalid_argument("explicit matroid: " + violation);
    }
  }
  return m;
}

std::string Matroid::kind_name() const {
  return std::visit(Overloaded{[](const Uniform&) { return "uniform"; },
                               [](const Partition&) { return "partition"; },
                               [](const Graphic&) { return "graphic"; },
                               [](const Explicit&) { return "explicit"; }},
                    kind_);
}

bool Matroid::is_independent(std::span<const ElementId> s) const {
  for (ElementId e : s) {
    if (!in_ground(e)) {
      throw std::domain_error("element " + std::to_string(to_index(e)) +
                              " is outside the matroid ground set");
    }
  }
  queries_.fetch_add(1, std::memory_order_relaxed);
  return evaluate(s);
}

bool Matroid::evaluate(std::span<const ElementId> s) const {
  return std::visit(
      Overloaded{
          [&](const Uniform& u) { return s.size() <= u.rank; },
          [&](const Partition& p) {
            std::vector<std::size_t> used(p.blocks.size(), 0);
            for (ElementId e : s) {
              std::size_t b = block_of_.at(e);
              if (++used[b] > p.capacities[b]) return false;
            }
            return true;
          },
          [&](const Graphic& g) {
            VertexForest forest;
            for (ElementId e : s) {
              const auto& [u, v] = g.edges.at(e);
              if (!forest.unite(u, v)) return false;
            }
            return true;
          },
          [&](const Explicit& x) {
            return x.independent.contains(make_set(ElementSet(s.begin(), s.end())));
          }},
      kind_);
}

std::string Matroid::check_axioms() const {
  const std::size_t n = ground_.size();
  if (n > 16) throw std::invalid_argument("check_axioms: ground set too large");
  const std::uint32_t full = 1u << n;
  auto members = [&](std::uint32_t mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(ground_[i]);
    }
    return s;
  };
  std::vector<char> indep(full);
  for (std::uint32_t mask = 0; mask < full; ++mask) indep[mask] = evaluate(members(mask));
  if (!indep[0]) return "empty set is dependent";
  std::vector<std::uint32_t> family;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!indep[mask]) continue;
    family.push_back(mask);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t bit = 1u << i;
      if ((mask & bit) && !indep[mask & ~bit]) {
        return "not hereditary: " + to_string(members(mask)) + " independent but " +
               to_string(members(mask & ~bit)) + " is not";
      }
    }
  }
  for (std::uint32_t a : family) {
    for (std::uint32_t b : family) {
      if (std::popcount(a) >= std::popcount(b)) continue;
      bool augmented = false;
      for (std::uint32_t rest = b & ~a; rest != 0 && !augmented; rest &= rest - 1) {
        augmented = indep[a | (rest & (~rest + 1))];
      }
      if (!augmented) {
        return "augmentation fails for " + to_string(members(a)) + " and " +
               to_string(members(b));
      }
    }
  }
  return {};
}

std::size_t rank(const Matroid& m, std::span<const ElementId> s) {
  ElementSet basis;
  for (ElementId e : s) {
    ElementSet candidate = with_element(basis, e);
    if (candidate.size() == basis.size()) continue;
    if (m.is_independent(candidate)) basis = std::move(candidate);
  }
  return basis.size();
}

ElementSet span_of(const Matroid& m, std::span<const ElementId> t) {
  if (!t.empty() && !m.is_independent(t)) {
    throw std::invalid_argument("span_of: " + to_string(t) + " is dependent");
  }
  return span_within(m, t, m.ground());
}

ElementSet span_within(const Matroid& m, std::span<const ElementId> t,
                       std::span<const ElementId> candidates,
                       std::uint64_t* queries) {
  ElementSet out;
  for (ElementId e : candidates) {
    if (contains(t, e)) {
      out.push_back(e);
      continue;
    }
    if (!m.in_ground(e)) continue;
    if (queries != nullptr) ++*queries;
    if (!m.is_independent(with_element(t, e))) out.push_back(e);
  }
  return make_set(std::move(out));
}

}  // namespace repkernel
