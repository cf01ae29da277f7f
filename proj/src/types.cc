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

#include "repkernel/types.h"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace repkernel {

ElementSet make_set(std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

ElementSet make_set(std::initializer_list<std::uint32_t> ids) {
  std::vector<ElementId> elements;
  elements.reserve(ids.size());
  for (std::uint32_t id : ids) elements.push_back(ElementId{id});
  return make_set(std::move(elements));
}

bool contains(std::span<const ElementId> set, ElementId e) {
  return std::binary_search(set.begin(), set.end(), e);
}

bool is_subset(std::span<const ElementId> sub, std::span<const ElementId> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

ElementSet set_union(std::span<const ElementId> a, std::span<const ElementId> b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet with_element(std::span<const ElementId> set, ElementId e) {
  ElementSet out(set.begin(), set.end());
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it == out.end() || *it != e) out.insert(it, e);
  return out;
}

ElementSet without_element(std::span<const ElementId> set, ElementId e) {
  ElementSet out;
  out.reserve(set.size());
  for (ElementId x : set) {
    if (x != e) out.push_back(x);
  }
  return out;
}

std::string to_string(std::span<const ElementId> set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) os << ',';
    os << to_index(set[i]);
  }
  os << '}';
  return os.str();
}

}  // namespace repkernel
