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

#include "repkernel/bruteforce.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace repkernel {

namespace {

void require_size(const Matchoid& mc, std::size_t limit, const char* who) {
  if (mc.universe().size() > limit) {
    throw std::length_error(std::string(who) + ": universe of " +
                            std::to_string(mc.universe().size()) +
                            " elements exceeds the limit of " + std::to_string(limit));
  }
}

// Calls visit(S) for every feasible S (sorted) with |S| <= max_size, growing
// sets in universe order and pruning infeasible ones. Returns the number of
// sets examined, the infeasible ones included.
std::uint64_t for_each_feasible(const Matchoid& mc, std::size_t max_size,
                                const std::function<void(const ElementSet&)>& visit) {
  const ElementSet& x = mc.universe();
  ElementSet current;
  std::uint64_t examined = 1;
  visit(current);
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (current.size() == max_size) return;
    for (std::size_t i = from; i < x.size(); ++i) {
      current.push_back(x[i]);
      ++examined;
      if (feasible_uncounted(mc, current)) {
        visit(current);
        grow(i + 1);
      }
      current.pop_back();
    }
  };
  grow(0);
  return examined;
}

double sum_weights(const WeightFn& w, std::span<const ElementId> s) {
  double total = 0.0;
  for (ElementId e : s) total += w.weight(e);
  return total;
}

}  // namespace

bool feasible_uncounted(const Matchoid& mc, std::span<const ElementId> s) {
  ElementSet trace;
  for (const Matroid& m : mc.matroids()) {
    trace.clear();
    for (ElementId e : s) {
      if (m.in_ground(e)) trace.push_back(e);
    }
    if (!trace.empty() && !m.evaluate(trace)) return false;
  }
  return true;
}

BruteForceResult brute_max_weight_feasible(const Matchoid& mc, const WeightFn& w,
                                           std::size_t k, bool pruning) {
  require_size(mc, 20, "brute_max_weight_feasible");
  BruteForceResult best;
  auto consider = [&](const ElementSet& s) {
    const double value = sum_weights(w, s);
    if (value > best.value) {
      best.value = value;
      best.witness = s;
    }
  };
  if (pruning) {
    best.enumerated = for_each_feasible(mc, k, consider);
    return best;
  }
  const ElementSet& x = mc.universe();
  ElementSet current;
  std::function<void(std::size_t)> all = [&](std::size_t from) {
    ++best.enumerated;
    if (feasible_uncounted(mc, current)) consider(current);
    if (current.size() == k) return;
    for (std::size_t i = from; i < x.size(); ++i) {
      current.push_back(x[i]);
      all(i + 1);
      current.pop_back();
    }
  };
  all(0);
  return best;
}

std::vector<PointId> heaviest_points(const CoverageInstance& instance,
                                     std::span<const ElementId> s, std::size_t z) {
  std::vector<PointId> covered;
  for (ElementId e : s) {
    const PointSet& p = instance.points(e);
    covered.insert(covered.end(), p.begin(), p.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  std::stable_sort(covered.begin(), covered.end(), [&](PointId a, PointId b) {
    return instance.weight(a) > instance.weight(b);
  });
  if (covered.size() > z) covered.resize(z);
  return covered;
}

BruteForceResult brute_max_coverage(const Matchoid& mc, const CoverageInstance& instance,
                                    std::size_t z) {
  require_size(mc, 16, "brute_max_coverage");
  BruteForceResult best;
  best.enumerated = for_each_feasible(mc, mc.universe().size(), [&](const ElementSet& s) {
    double value = 0.0;
    for (PointId p : heaviest_points(instance, s, z)) value += instance.weight(p);
    if (value > best.value) {
      best.value = value;
      best.witness = s;
    }
  });
  return best;
}

RepSetCheck check_joint_rep_set(std::span<const ElementId> r, std::span<const ElementId> t,
                                const Matchoid& mc, const WeightFn& w, std::size_t k,
                                bool strict) {
  require_size(mc, 14, "check_joint_rep_set");
  RepSetCheck result;
  for_each_feasible(mc, k, [&](const ElementSet& b_set) {
    if (!result.ok) return;
    for (ElementId b : b_set) {
      if (!contains(t, b)) continue;
      ++result.pairs_checked;
      const ElementSet rest = without_element(b_set, b);
      bool found = false;
      for (ElementId e : r) {
        if (w.weight(e) < w.weight(b)) continue;
        if (e != b && contains(rest, e)) {
          if (strict) continue;
          found = true;  // B - b + e = B - b
          break;
        }
        if (feasible_uncounted(mc, with_element(rest, e))) {
          found = true;
          break;
        }
      }
      if (!found) {
        result.ok = false;
        result.b_set = b_set;
        result.b = b;
        return;
      }
    }
  });
  return result;
}

bool check_well_colored(const Coloring& h, std::span<const PointId> points) {
  std::vector<Color> colors;
  for (PointId p : points) colors.push_back(h(p));
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

namespace {

void snapshot_node(const TreeNode& n, NodePath& path, TreeSnapshot& out) {
  out[path] = n.slots;
  for (const auto& [owner, kids] : n.children) {
    for (std::size_t i = 0; i < kids.size(); ++i) {
      path.push_back(to_index(owner));
      path.push_back(static_cast<std::uint32_t>(i));
      snapshot_node(*kids[i], path, out);
      path.resize(path.size() - 2);
    }
  }
}

PointSet intersect(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PointSet minus(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string path_name(const NodePath& path) {
  std::string s = "tree " + std::to_string(path.front());
  for (std::size_t i = 1; i + 1 < path.size(); i += 2) {
    s += " / " + std::to_string(path[i]) + "#" + std::to_string(path[i + 1]);
  }
  return s;
}

struct InvariantWalk {
  const CoverageInstance& instance;
  std::size_t z;
  std::size_t j;
  std::uint64_t slot_limit;
  std::vector<std::string>& out;

  void visit(const TreeNode& n, const PointSet& parent_points, NodePath& path) {
    const std::string where = path_name(path);
    auto fail = [&](const std::string& what) { out.push_back(where + ": " + what); };

    if (n.depth > z - 1) fail("depth " + std::to_string(n.depth) + " exceeds z-1");
    std::size_t stored = 0;
    for (const ElementSet& slot : n.slots) {
      stored += slot.size();
      if (slot.size() > slot_limit) fail("slot holds " + std::to_string(slot.size()));
    }
    const ElementSet reps = n.all_reps();
    if (reps.size() != stored) fail("slots are not disjoint");
    if (reps.empty()) fail("node stores no element");

    std::vector<PointSet> outside;
    for (std::size_t a = 0; a < reps.size(); ++a) {
      const PointSet& pa = instance.points(reps[a]);
      if (pa.size() != j) {
        fail("element " + std::to_string(to_index(reps[a])) + " has value " +
             std::to_string(pa.size()));
      }
      const PointSet shared = intersect(pa, parent_points);
      if (shared.size() < n.depth) {
        fail("element " + std::to_string(to_index(reps[a])) +
             " shares fewer points with the parent than the depth");
      }
      if (a > 0 && shared != intersect(instance.points(reps[0]), parent_points)) {
        fail("elements " + std::to_string(to_index(reps[0])) + " and " +
             std::to_string(to_index(reps[a])) + " differ inside the parent");
      }
      const PointSet rest = minus(pa, parent_points);
      for (const PointSet& other : outside) {
        if (!intersect(rest, other).empty()) {
          fail("element " + std::to_string(to_index(reps[a])) +
               " meets another element outside the parent");
        }
      }
      outside.push_back(rest);
    }

    for (const auto& [owner, kids] : n.children) {
      if (!contains(reps, owner)) {
        fail("children attached to non-stored element " + std::to_string(to_index(owner)));
      }
      if (kids.size() > (std::size_t{1} << (z - 1))) {
        fail("element " + std::to_string(to_index(owner)) + " has " +
             std::to_string(kids.size()) + " children");
      }
      const PointSet& owner_points = instance.points(owner);
      for (std::size_t i = 0; i < kids.size(); ++i) {
        path.push_back(to_index(owner));
        path.push_back(static_cast<std::uint32_t>(i));
        if (kids[i]->parent_elem != owner || kids[i]->depth != n.depth + 1) {
          out.push_back(path_name(path) + ": wrong parent element or depth");
        }
        visit(*kids[i], owner_points, path);
        path.resize(path.size() - 2);
      }
    }
  }
};

}  // namespace

TreeSnapshot snapshot_trees(const StreamingCoverage& sc) {
  TreeSnapshot out;
  for (std::size_t j = 1; j <= sc.tree_count(); ++j) {
    NodePath path{static_cast<std::uint32_t>(j)};
    snapshot_node(sc.root(j), path, out);
  }
  return out;
}

std::vector<std::string> check_tree_invariants(const StreamingCoverage& sc,
                                               const CoverageInstance& instance,
                                               const TreeSnapshot* previous) {
  std::vector<std::string> out;
  const std::size_t z = sc.z();
  const std::uint64_t slot_limit = gamma(sc.matchoid().ell(), z);
  for (std::size_t j = 1; j <= sc.tree_count(); ++j) {
    const TreeNode& root = sc.root(j);
    NodePath path{static_cast<std::uint32_t>(j)};
    if (root.slots.size() != z) out.push_back(path_name(path) + ": root lacks z slots");
    InvariantWalk walk{instance, z, j, slot_limit, out};
    // Roots exist from the start and stay empty until their first element.
    if (root.all_reps().empty()) {
      if (!root.children.empty()) out.push_back(path_name(path) + ": empty root has children");
      continue;
    }
    walk.visit(root, PointSet{}, path);
  }
  if (previous != nullptr) {
    const TreeSnapshot now = snapshot_trees(sc);
    for (const auto& [path, slots] : *previous) {
      auto it = now.find(path);
      if (it == now.end()) {
        out.push_back(path_name(path) + ": node disappeared");
        continue;
      }
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i >= it->second.size() || !is_subset(slots[i], it->second[i])) {
          out.push_back(path_name(path) + ": slot " + std::to_string(i + 1) +
                        " lost an element");
        }
      }
    }
  }
  return out;
}

}  // namespace repkernel
