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

// Element identifiers and sorted element sets shared by every module.

#ifndef REPKERNEL_TYPES_H_
#define REPKERNEL_TYPES_H_

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace repkernel {

enum class ElementId : std::uint32_t {};

constexpr std::uint32_t to_index(ElementId e) {
  return static_cast<std::uint32_t>(e);
}

// Reserved id; never a member of any instance.
inline constexpr ElementId kNoElement{std::numeric_limits<std::uint32_t>::max()};

// Sorted ascending by id, no duplicates. Every function taking an ElementSet
// assumes this normal form; make_set() produces it.
using ElementSet = std::vector<ElementId>;

ElementSet make_set(std::vector<ElementId> elements);
ElementSet make_set(std::initializer_list<std::uint32_t> ids);

bool contains(std::span<const ElementId> set, ElementId e);
bool is_subset(std::span<const ElementId> sub, std::span<const ElementId> super);
ElementSet set_union(std::span<const ElementId> a, std::span<const ElementId> b);
ElementSet with_element(std::span<const ElementId> set, ElementId e);
ElementSet without_element(std::span<const ElementId> set, ElementId e);

std::string to_string(std::span<const ElementId> set);

}  // namespace repkernel

#endif  // REPKERNEL_TYPES_H_
