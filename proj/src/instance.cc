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

#include "repkernel/instance.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <type_traits>
#include <unordered_map>
#include <variant>

#include "json.hpp"

namespace repkernel {

using Json = nlohmann::ordered_json;

ElementSet Instance::ids() const {
  std::vector<ElementId> out;
  out.reserve(elements.size());
  for (const InstanceElement& e : elements) out.push_back(e.id);
  return make_set(std::move(out));
}

const InstanceElement& Instance::element(ElementId e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e,
                             [](const InstanceElement& a, ElementId b) { return a.id < b; });
  if (it == elements.end() || it->id != e) {
    throw std::domain_error("instance has no element " + std::to_string(to_index(e)));
  }
  return *it;
}

bool Instance::has_points() const {
  return !elements.empty() &&
         std::all_of(elements.begin(), elements.end(),
                     [](const InstanceElement& e) { return e.points.has_value(); });
}

bool same_instance(const Instance& a, const Instance& b) {
  if (a.elements != b.elements || a.stream_order != b.stream_order ||
      a.num_points != b.num_points || a.point_weights != b.point_weights ||
      a.metadata != b.metadata || a.matroids.size() != b.matroids.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.matroids.size(); ++i) {
    if (!a.matroids[i].same_structure(b.matroids[i])) return false;
  }
  return true;
}

void validate(const Instance& inst) {
  for (std::size_t i = 1; i < inst.elements.size(); ++i) {
    if (!(inst.elements[i - 1].id < inst.elements[i].id)) {
      throw InstanceError("elements: ids must be unique and increasing");
    }
  }
  const ElementSet ids = inst.ids();
  ElementSet order(inst.stream_order.begin(), inst.stream_order.end());
  std::sort(order.begin(), order.end());
  if (order != ids) throw InstanceError("stream_order: not a permutation of the element ids");
  for (std::size_t i = 0; i < inst.matroids.size(); ++i) {
    if (!is_subset(inst.matroids[i].ground(), ids)) {
      throw InstanceError("matroids[" + std::to_string(i) +
                          "]: ground contains an unknown element");
    }
  }
  if (!inst.point_weights.empty() && inst.point_weights.size() != inst.num_points) {
    throw InstanceError("point_weights: expected " + std::to_string(inst.num_points) +
                        " entries");
  }
  for (std::size_t p = 0; p < inst.point_weights.size(); ++p) {
    if (!(inst.point_weights[p] >= 0.0)) {
      throw InstanceError("point_weights[" + std::to_string(p) + "]: negative weight");
    }
  }
  for (const InstanceElement& e : inst.elements) {
    if (!e.points) continue;
    for (PointId p : *e.points) {
      if (p >= inst.num_points) {
        throw InstanceError("element " + std::to_string(to_index(e.id)) + ": point " +
                            std::to_string(p) + " is not below num_points");
      }
    }
  }
}

Matchoid build_matchoid(const Instance& inst) {
  try {
    return Matchoid(inst.matroids, inst.ids());
  } catch (const std::invalid_argument& err) {
    throw InstanceError(std::string("matroids: ") + err.what());
  }
}

WeightFn build_weights(const Instance& inst) {
  WeightFn w;
  for (std::size_t t = 0; t < inst.stream_order.size(); ++t) {
    const ElementId e = inst.stream_order[t];
    w.set(e, inst.element(e).weight, t);
  }
  return w;
}

CoverageInstance build_coverage(const Instance& inst) {
  std::unordered_map<ElementId, PointSet> sets;
  for (const InstanceElement& e : inst.elements) {
    if (!e.points) {
      throw InstanceError("element " + std::to_string(to_index(e.id)) + " has no points");
    }
    sets.emplace(e.id, *e.points);
  }
  try {
    return CoverageInstance(inst.num_points, std::move(sets), inst.point_weights);
  } catch (const std::invalid_argument& err) {
    throw InstanceError(err.what());
  }
}

// ---------------------------------------------------------------------------
// Generators. Draws go through mt19937_64 directly (the standard
// distributions are not reproducible across library implementations).

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : gen_(seed) {}
  // Uniform in [0, n); n > 0. Modulo bias is negligible at these sizes.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::uint32_t percent) { return below(100) < percent; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
  std::vector<std::size_t> pick(std::size_t n, std::size_t count) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    shuffle(all);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
  }

 private:
  std::mt19937_64 gen_;
};

Matroid random_matroid(Draw& draw, MatroidKind kind, const ElementSet& ground) {
  const std::size_t g = ground.size();
  if (g == 0) return Matroid::uniform({}, 0);
  switch (kind) {
    case MatroidKind::kUniform:
      return Matroid::uniform(ground, draw.between(1, std::min<std::size_t>(g, 3)));
    case MatroidKind::kPartition: {
      const std::size_t nblocks = draw.between(1, std::min<std::size_t>(g, 3));
      std::vector<ElementSet> blocks(nblocks);
      for (ElementId e : ground) blocks[draw.below(nblocks)].push_back(e);
      std::vector<ElementSet> kept;
      std::vector<std::size_t> caps;
      for (ElementSet& b : blocks) {
        if (b.empty()) continue;
        caps.push_back(draw.between(1, std::min<std::size_t>(b.size(), 2)));
        kept.push_back(std::move(b));
      }
      return Matroid::partition(std::move(kept), std::move(caps));
    }
    case MatroidKind::kGraphic: {
      const auto vertices = static_cast<std::uint32_t>(draw.between(2, std::max<std::size_t>(2, g)));
      std::map<ElementId, std::pair<std::uint32_t, std::uint32_t>> edges;
      for (ElementId e : ground) {
        const auto u = static_cast<std::uint32_t>(draw.below(vertices));
        auto v = static_cast<std::uint32_t>(draw.below(vertices - 1));
        if (v >= u) ++v;
        edges[e] = {std::min(u, v), std::max(u, v)};
      }
      return Matroid::graphic(std::move(edges));
    }
  }
  throw std::logic_error("random_matroid: unknown kind");
}

std::vector<ElementId> id_range(std::size_t n) {
  std::vector<ElementId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(ElementId{static_cast<std::uint32_t>(i)});
  return ids;
}

}  // namespace

Instance gen_random_matchoid(std::size_t n, std::size_t s, std::size_t ell,
                             const std::vector<MatroidKind>& kinds, std::uint64_t seed) {
  if (s == 0 || ell == 0 || ell > s) {
    throw std::invalid_argument("gen_random_matchoid: need 1 <= ell <= s");
  }
  if (kinds.empty()) throw std::invalid_argument("gen_random_matchoid: no matroid kinds");
  Draw draw(seed);
  Instance inst;
  inst.metadata = {"random_matchoid", seed, 0};
  std::vector<ElementSet> grounds(s);
  for (ElementId e : id_range(n)) {
    inst.elements.push_back({e, static_cast<double>(draw.between(1, 20)), std::nullopt});
    // A few elements stay outside every ground.
    const std::size_t count = draw.chance(10) ? 0 : draw.between(1, ell);
    for (std::size_t i : draw.pick(s, count)) grounds[i].push_back(e);
  }
  for (std::size_t i = 0; i < s; ++i) {
    inst.matroids.push_back(random_matroid(draw, kinds[draw.below(kinds.size())], grounds[i]));
  }
  inst.stream_order = id_range(n);
  draw.shuffle(inst.stream_order);
  return inst;
}

namespace {

void attach_points(Instance& inst, std::size_t m, std::size_t max_set, bool weighted,
                   std::uint64_t seed) {
  // Separate stream so the matroid structure does not depend on m.
  Draw draw(seed ^ 0x5DEECE66DULL);
  inst.num_points = m;
  const std::size_t cap = std::min(max_set, m);
  for (InstanceElement& e : inst.elements) {
    e.points = PointSet{};
    if (cap == 0) continue;
    for (std::size_t p : draw.pick(m, draw.between(1, cap))) {
      e.points->push_back(static_cast<PointId>(p));
    }
  }
  inst.point_weights.clear();
  if (weighted) {
    for (std::size_t p = 0; p < m; ++p) {
      inst.point_weights.push_back(static_cast<double>(draw.between(1, 10)));
    }
  }
}

}  // namespace

Instance gen_coverage(std::size_t n, std::size_t m, std::size_t max_set, bool weighted,
                      std::uint64_t seed) {
  Instance inst;
  inst.metadata = {"coverage", seed, 0};
  for (ElementId e : id_range(n)) inst.elements.push_back({e, 1.0, std::nullopt});
  inst.stream_order = id_range(n);
  Draw(seed).shuffle(inst.stream_order);
  attach_points(inst, m, max_set, weighted, seed);
  return inst;
}

Instance gen_coverage(std::size_t n, std::size_t m, std::size_t max_set, bool weighted,
                      std::size_t s, std::size_t ell, const std::vector<MatroidKind>& kinds,
                      std::uint64_t seed) {
  Instance inst = gen_random_matchoid(n, s, ell, kinds, seed);
  inst.metadata.generator = "coverage_matchoid";
  for (InstanceElement& e : inst.elements) e.weight = 1.0;
  attach_points(inst, m, max_set, weighted, seed);
  return inst;
}

Instance encode_independent_set(const Graph& graph, std::size_t k) {
  Instance inst;
  inst.metadata = {"independent_set", 0, k};
  inst.num_points = graph.vertices;
  for (ElementId e : id_range(graph.vertices)) {
    inst.elements.push_back({e, 1.0, PointSet{to_index(e)}});
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto [u, v] : graph.edges) {
    if (u == v) throw std::invalid_argument("encode_independent_set: self-loop");
    if (u >= graph.vertices || v >= graph.vertices) {
      throw std::invalid_argument("encode_independent_set: endpoint out of range");
    }
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw std::invalid_argument("encode_independent_set: repeated edge");
    }
    inst.matroids.push_back(Matroid::uniform(make_set({u, v}), 1));
  }
  inst.stream_order = id_range(graph.vertices);
  return inst;
}

// ---------------------------------------------------------------------------
// JSON.

std::string format_weight(double w) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w);
  if (ec != std::errc{}) throw std::logic_error("format_weight failed");
  return std::string(buf, end);
}

double parse_weight(const std::string& s) {
  double w = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
    throw InstanceError("'" + s + "' is not a decimal number");
  }
  return w;
}

namespace {

Json id_list(std::span<const ElementId> ids) {
  Json out = Json::array();
  for (ElementId e : ids) out.push_back(to_index(e));
  return out;
}

Json matroid_json(const Matroid& m) {
  Json j;
  std::visit(
      [&](const auto& kind) {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, Matroid::Uniform>) {
          j["kind"] = "uniform";
          j["ground"] = id_list(m.ground());
          j["rank"] = kind.rank;
        } else if constexpr (std::is_same_v<K, Matroid::Partition>) {
          j["kind"] = "partition";
          j["blocks"] = Json::array();
          for (const ElementSet& b : kind.blocks) j["blocks"].push_back(id_list(b));
          j["capacities"] = kind.capacities;
        } else if constexpr (std::is_same_v<K, Matroid::Graphic>) {
          j["kind"] = "graphic";
          j["edges"] = Json::array();
          for (const auto& [e, uv] : kind.edges) {
            j["edges"].push_back({{"id", to_index(e)}, {"u", uv.first}, {"v", uv.second}});
          }
        } else {
          j["kind"] = "explicit";
          j["ground"] = id_list(m.ground());
          j["independent"] = Json::array();
          for (const ElementSet& s : kind.independent) j["independent"].push_back(id_list(s));
        }
      },
      m.kind());
  return j;
}

// Field access with the JSON path in every error.
const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InstanceError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InstanceError(path + "." + key + ": missing");
  return *it;
}

std::uint64_t as_uint(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw InstanceError(path + ": expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const Json& j, const std::string& path) {
  const std::uint64_t v = as_uint(j, path);
  if (v >= std::numeric_limits<std::uint32_t>::max()) {
    throw InstanceError(path + ": value too large");
  }
  return static_cast<std::uint32_t>(v);
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InstanceError(path + ": expected an array");
  return j;
}

double as_weight(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InstanceError(path + ": weights are decimal strings");
  try {
    return parse_weight(j.get<std::string>());
  } catch (const InstanceError& err) {
    throw InstanceError(path + ": " + err.what());
  }
}

ElementSet id_set(const Json& j, const std::string& path) {
  std::vector<ElementId> out;
  const Json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(ElementId{as_u32(arr[i], path + "[" + std::to_string(i) + "]")});
  }
  return make_set(std::move(out));
}

Matroid parse_matroid(const Json& j, const std::string& path) {
  const Json& kind_json = field(j, "kind", path);
  if (!kind_json.is_string()) throw InstanceError(path + ".kind: expected a string");
  const std::string kind = kind_json.get<std::string>();
  try {
    if (kind == "uniform") {
      return Matroid::uniform(id_set(field(j, "ground", path), path + ".ground"),
                              as_uint(field(j, "rank", path), path + ".rank"));
    }
    if (kind == "partition") {
      const Json& blocks = as_array(field(j, "blocks", path), path + ".blocks");
      const Json& caps = as_array(field(j, "capacities", path), path + ".capacities");
      std::vector<ElementSet> bs;
      std::vector<std::size_t> cs;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        bs.push_back(id_set(blocks[i], path + ".blocks[" + std::to_string(i) + "]"));
      }
      for (std::size_t i = 0; i < caps.size(); ++i) {
        cs.push_back(as_uint(caps[i], path + ".capacities[" + std::to_string(i) + "]"));
      }
      return Matroid::partition(std::move(bs), std::move(cs));
    }
    if (kind == "graphic") {
      const Json& edges = as_array(field(j, "edges", path), path + ".edges");
      std::map<ElementId, std::pair<std::uint32_t, std::uint32_t>> es;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string ep = path + ".edges[" + std::to_string(i) + "]";
        const ElementId id{as_u32(field(edges[i], "id", ep), ep + ".id")};
        if (!es.emplace(id, std::pair{as_u32(field(edges[i], "u", ep), ep + ".u"),
                                      as_u32(field(edges[i], "v", ep), ep + ".v")})
                 .second) {
          throw InstanceError(ep + ".id: repeated edge id");
        }
      }
      return Matroid::graphic(std::move(es));
    }
    if (kind == "explicit") {
      const Json& indep = as_array(field(j, "independent", path), path + ".independent");
      std::vector<ElementSet> sets;
      for (std::size_t i = 0; i < indep.size(); ++i) {
        sets.push_back(id_set(indep[i], path + ".independent[" + std::to_string(i) + "]"));
      }
      return Matroid::explicit_family(id_set(field(j, "ground", path), path + ".ground"),
                                      std::move(sets));
    }
  } catch (const std::invalid_argument& err) {
    throw InstanceError(path + ": " + err.what());
  }
  throw InstanceError(path + ".kind: unknown matroid kind '" + kind + "'");
}

Instance from_json(const Json& root) {
  if (!root.is_object()) throw InstanceError("$: expected an object");
  const Json& format = field(root, "format", "$");
  if (format != "repkernel-instance") throw InstanceError("$.format: not a repkernel instance");
  if (as_uint(field(root, "version", "$"), "$.version") != 1) {
    throw InstanceError("$.version: unsupported version");
  }
  Instance inst;
  if (auto it = root.find("metadata"); it != root.end()) {
    const Json& meta = *it;
    if (!meta.is_object()) throw InstanceError("$.metadata: expected an object");
    if (auto g = meta.find("generator"); g != meta.end()) {
      if (!g->is_string()) throw InstanceError("$.metadata.generator: expected a string");
      inst.metadata.generator = g->get<std::string>();
    }
    if (auto s = meta.find("seed"); s != meta.end()) {
      inst.metadata.seed = as_uint(*s, "$.metadata.seed");
    }
    if (auto k = meta.find("suggested_k"); k != meta.end()) {
      inst.metadata.suggested_k = as_uint(*k, "$.metadata.suggested_k");
    }
  }
  if (auto it = root.find("num_points"); it != root.end()) {
    inst.num_points = as_uint(*it, "$.num_points");
  }
  if (auto it = root.find("point_weights"); it != root.end()) {
    const Json& arr = as_array(*it, "$.point_weights");
    for (std::size_t p = 0; p < arr.size(); ++p) {
      inst.point_weights.push_back(as_weight(arr[p], "$.point_weights[" + std::to_string(p) + "]"));
    }
  }
  const Json& elements = as_array(field(root, "elements", "$"), "$.elements");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string path = "$.elements[" + std::to_string(i) + "]";
    InstanceElement e;
    e.id = ElementId{as_u32(field(elements[i], "id", path), path + ".id")};
    if (auto w = elements[i].find("weight"); w != elements[i].end()) {
      e.weight = as_weight(*w, path + ".weight");
    }
    if (auto p = elements[i].find("points"); p != elements[i].end()) {
      const Json& arr = as_array(*p, path + ".points");
      PointSet pts;
      for (std::size_t q = 0; q < arr.size(); ++q) {
        pts.push_back(as_u32(arr[q], path + ".points[" + std::to_string(q) + "]"));
      }
      std::sort(pts.begin(), pts.end());
      if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
        throw InstanceError(path + ".points: repeated point");
      }
      e.points = std::move(pts);
    }
    inst.elements.push_back(std::move(e));
  }
  std::sort(inst.elements.begin(), inst.elements.end(),
            [](const InstanceElement& a, const InstanceElement& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < inst.elements.size(); ++i) {
    if (inst.elements[i - 1].id == inst.elements[i].id) {
      throw InstanceError("$.elements: repeated id " +
                          std::to_string(to_index(inst.elements[i].id)));
    }
  }
  if (auto it = root.find("matroids"); it != root.end()) {
    const Json& arr = as_array(*it, "$.matroids");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      inst.matroids.push_back(parse_matroid(arr[i], "$.matroids[" + std::to_string(i) + "]"));
    }
  }
  if (auto it = root.find("stream_order"); it != root.end()) {
    const Json& arr = as_array(*it, "$.stream_order");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      inst.stream_order.push_back(
          ElementId{as_u32(arr[i], "$.stream_order[" + std::to_string(i) + "]")});
    }
  } else {
    inst.stream_order = inst.ids();
  }
  validate(inst);
  return inst;
}

Json to_json(const Instance& inst) {
  Json root;
  root["format"] = "repkernel-instance";
  root["version"] = 1;
  root["metadata"] = {{"generator", inst.metadata.generator},
                      {"seed", inst.metadata.seed},
                      {"suggested_k", inst.metadata.suggested_k}};
  root["num_points"] = inst.num_points;
  if (!inst.point_weights.empty()) {
    root["point_weights"] = Json::array();
    for (double w : inst.point_weights) root["point_weights"].push_back(format_weight(w));
  }
  root["elements"] = Json::array();
  for (const InstanceElement& e : inst.elements) {
    Json j = {{"id", to_index(e.id)}, {"weight", format_weight(e.weight)}};
    if (e.points) j["points"] = *e.points;
    root["elements"].push_back(std::move(j));
  }
  root["matroids"] = Json::array();
  for (const Matroid& m : inst.matroids) root["matroids"].push_back(matroid_json(m));
  root["stream_order"] = id_list(inst.stream_order);
  return root;
}

}  // namespace

Instance load_instance(std::istream& in) {
  Json root;
  try {
    root = Json::parse(in);
  } catch (const Json::parse_error& err) {
    // The parser's message carries the line and column.
    throw InstanceError(std::string("malformed JSON: ") + err.what());
  }
  return from_json(root);
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open " + path);
  try {
    return load_instance(in);
  } catch (const InstanceError& err) {
    throw InstanceError(path + ": " + err.what());
  }
}

void save_instance(std::ostream& out, const Instance& inst) {
  validate(inst);
  out << to_json(inst).dump(1) << '\n';
}

void save_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw InstanceError("cannot write " + path);
  save_instance(out, inst);
  if (!out) throw InstanceError("write to " + path + " failed");
}

}  // namespace repkernel
