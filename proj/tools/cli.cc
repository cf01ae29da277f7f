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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "repkernel/bruteforce.h"
#include "repkernel/colorcode.h"
#include "repkernel/coverage.h"
#include "repkernel/instance.h"
#include "repkernel/matchoid.h"
#include "repkernel/repset.h"
#include "repkernel/stream.h"
#include "repkernel/streaming_coverage.h"

namespace repkernel::cli {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string instance;
  std::string report;
  std::size_t k = 0;
  std::size_t z = 0;
  double eps = 0.1;
  std::uint64_t seed = 1;
  std::string mode = "random";
  std::size_t parallel = 1;
  bool literal = false;

  // gen
  std::string generator = "matchoid";
  std::string out;
  std::size_t n = 8;
  std::size_t s = 3;
  std::size_t ell = 2;
  std::size_t m = 6;
  std::size_t max_set = 2;
  bool weighted = false;
  std::string kinds = "uniform,partition,graphic";
  std::size_t vertices = 0;
  std::string edges;
};

// Records go to stdout and, with --report, to a file; one JSON object per
// line with a "record" tag.
class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}
  void emit(const Json& record) {
    lines_.push_back(record.dump());
    out_ << lines_.back() << '\n';
  }
  void save(const std::string& path) const {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw InputError("cannot write report " + path);
    for (const std::string& line : lines_) f << line << '\n';
  }

 private:
  std::ostream& out_;
  std::vector<std::string> lines_;
};

Json ids(std::span<const ElementId> s) {
  Json out = Json::array();
  for (ElementId e : s) out.push_back(to_index(e));
  return out;
}

ElementSet parse_ids(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError("report: " + what + " is not an array");
  std::vector<ElementId> out;
  for (const Json& v : j) {
    if (!v.is_number_unsigned()) throw InputError("report: bad id in " + what);
    out.push_back(ElementId{v.get<std::uint32_t>()});
  }
  return make_set(std::move(out));
}

std::vector<MatroidKind> parse_kinds(const std::string& list) {
  std::vector<MatroidKind> kinds;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "uniform") kinds.push_back(MatroidKind::kUniform);
    else if (item == "partition") kinds.push_back(MatroidKind::kPartition);
    else if (item == "graphic") kinds.push_back(MatroidKind::kGraphic);
    else throw InputError("unknown matroid kind '" + item + "'");
  }
  return kinds;
}

Graph parse_graph(std::size_t vertices, const std::string& list) {
  Graph g;
  g.vertices = vertices;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InputError("edge '" + item + "' is not u-v");
    try {
      g.edges.emplace_back(static_cast<std::uint32_t>(std::stoul(item.substr(0, dash))),
                           static_cast<std::uint32_t>(std::stoul(item.substr(dash + 1))));
    } catch (const std::logic_error&) {
      throw InputError("edge '" + item + "' is not u-v");
    }
  }
  return g;
}

Instance load(const Options& o) {
  if (o.instance.empty()) throw InputError("--instance is required");
  return load_instance_file(o.instance);
}

std::size_t choose_k(const Options& o, const Instance& inst) {
  const std::size_t k = o.k != 0 ? o.k : inst.metadata.suggested_k;
  if (k == 0) throw InputError("--k is required (the instance suggests none)");
  return k;
}

std::size_t require_z(const Options& o) {
  if (o.z == 0) throw InputError("--z is required");
  return o.z;
}

// ---------------------------------------------------------------------------

int cmd_gen(const Options& o, Reporter& rep, std::ostream& out) {
  Instance inst;
  if (o.generator == "matchoid") {
    inst = gen_random_matchoid(o.n, o.s, o.ell, parse_kinds(o.kinds), o.seed);
    inst.metadata.suggested_k = o.k;
  } else if (o.generator == "coverage") {
    inst = gen_coverage(o.n, o.m, o.max_set, o.weighted, o.s, o.ell, parse_kinds(o.kinds),
                        o.seed);
    inst.metadata.suggested_k = o.k;
  } else {
    inst = encode_independent_set(parse_graph(o.vertices, o.edges), o.k);
  }
  if (o.out.empty()) {
    save_instance(out, inst);
    return kExitOk;
  }
  save_instance_file(o.out, inst);
  rep.emit({{"record", "summary"},
            {"mode", "gen"},
            {"generator", inst.metadata.generator},
            {"seed", inst.metadata.seed},
            {"elements", inst.elements.size()},
            {"matroids", inst.matroids.size()},
            {"path", o.out}});
  return kExitOk;
}

int cmd_kernel(const Options& o, Reporter& rep) {
  const Instance inst = load(o);
  const Matchoid mc = build_matchoid(inst);
  const WeightFn w = build_weights(inst);
  const std::size_t k = choose_k(o, inst);
  const KernelResult r = kernel_max_weight(mc, w, k);

  const std::uint64_t g = gamma(mc.ell(), k);
  const std::uint64_t n = mc.universe().size();
  const bool size_ok = r.kernel.size() <= g;
  const bool queries_ok = r.stats.independence_queries <= g * n;
  rep.emit({{"record", "summary"},
            {"mode", "kernel"},
            {"k", k},
            {"ell", mc.ell()},
            {"n", n},
            {"gamma", g},
            {"kernel_size", r.kernel.size()},
            {"kernel", ids(r.kernel)},
            {"solution", ids(r.solution)},
            {"value", format_weight(r.value)},
            {"independence_queries", r.stats.independence_queries},
            {"query_bound", g * n},
            {"recursion_calls", r.stats.calls},
            {"extraction_checks", r.extraction_checks},
            {"size_ok", size_ok},
            {"queries_ok", queries_ok}});
  return size_ok && queries_ok ? kExitOk : kExitBound;
}

int cmd_stream(const Options& o, Reporter& rep) {
  const Instance inst = load(o);
  const Matchoid mc = build_matchoid(inst);
  const std::size_t k = choose_k(o, inst);
  const std::uint64_t g = gamma(mc.ell(), k);

  StreamingRepSet srs(mc, k);
  bool steps_ok = true;
  for (ElementId e : inst.stream_order) {
    const std::size_t before = srs.current().size();
    const double weight = inst.element(e).weight;
    const StreamStep& step = srs.push(make_arrival(mc, e, weight));
    const std::uint64_t query_bound = g * (before + 1);
    const bool ok = step.rep_size <= g && step.independence_queries <= query_bound;
    steps_ok = steps_ok && ok;
    rep.emit({{"record", "step"},
              {"t", step.t},
              {"element", to_index(e)},
              {"weight", format_weight(weight)},
              {"rep_size", step.rep_size},
              {"independence_queries", step.independence_queries},
              {"query_bound", query_bound},
              {"recursion_depth", step.recursion_depth},
              {"aux_bits", step.aux_bits},
              {"ok", ok}});
  }
  const StreamMemoryReport mem = srs.memory_report();
  const ElementSet solution = best_weight_subset(srs.current(), mc, srs.weights(), k);
  const bool aux_ok = mem.peak_aux_bits <= mem.aux_bits_bound;
  rep.emit({{"record", "summary"},
            {"mode", "stream"},
            {"k", k},
            {"ell", mc.ell()},
            {"n", mem.arrivals},
            {"gamma", g},
            {"kernel_size", srs.current().size()},
            {"kernel", ids(srs.current())},
            {"solution", ids(solution)},
            {"value", format_weight(srs.weights().total(solution))},
            {"independence_queries", mem.independence_queries},
            {"max_step_queries", mem.max_step_queries},
            {"peak_rep_size", mem.peak_rep_size},
            {"peak_aux_bits", mem.peak_aux_bits},
            {"aux_bits_bound", mem.aux_bits_bound},
            {"size_ok", mem.peak_rep_size <= g},
            {"steps_ok", steps_ok},
            {"aux_ok", aux_ok}});
  return steps_ok && aux_ok && mem.peak_rep_size <= g ? kExitOk : kExitBound;
}

const char* outcome_name(CoverageArrival::Outcome out) {
  switch (out) {
    case CoverageArrival::Outcome::kEarlyExit: return "early_exit";
    case CoverageArrival::Outcome::kStored: return "stored";
    case CoverageArrival::Outcome::kBlocked: return "blocked";
    case CoverageArrival::Outcome::kNoPoints: return "no_points";
    case CoverageArrival::Outcome::kAfterExit: return "after_exit";
  }
  return "unknown";
}

void require_unweighted(const CoverageInstance& ci) {
  for (double w : ci.point_weights()) {
    if (w != 1.0) throw InputError("cover-oracle works on unweighted points only");
  }
}

int cmd_cover_oracle(const Options& o, Reporter& rep) {
  const Instance inst = load(o);
  const Matchoid mc = build_matchoid(inst);
  const CoverageInstance ci = build_coverage(inst);
  require_unweighted(ci);
  const std::size_t z = require_z(o);
  const CoverageValueOracle f(ci);
  StreamingCoverage sc(mc, f, z, CoverageOptions{o.literal});
  const std::uint64_t static_bound = per_arrival_query_bound(mc.ell(), z);

  bool steps_ok = true;
  std::size_t t = 0;
  for (ElementId e : inst.stream_order) {
    const CoverageArrival a = sc.push(e);
    const bool ok = a.value_queries <= a.value_query_budget && a.value_query_budget <= static_bound;
    steps_ok = steps_ok && ok;
    rep.emit({{"record", "step"},
              {"t", ++t},
              {"element", to_index(e)},
              {"outcome", outcome_name(a.outcome)},
              {"value", a.value},
              {"node_depth", a.node_depth},
              {"new_node", a.new_node},
              {"slot", a.slot ? Json(*a.slot + 1) : Json(nullptr)},
              {"value_queries", a.value_queries},
              {"value_query_budget", a.value_query_budget},
              {"static_bound", static_bound},
              {"independence_queries", a.independence_queries},
              {"ok", ok}});
  }
  const std::uint64_t stream_queries = f.queries();
  const ElementSet kernel = sc.kernel();
  const std::uint64_t bound = n_bound(mc.ell(), z);
  const bool size_ok = sc.finished_early() || kernel.size() <= bound;
  const std::optional<ElementSet> solution = extract_coverage_solution(f, kernel, mc, z);

  Json trees = Json::array();
  for (std::size_t j = 1; j <= sc.tree_count(); ++j) {
    const TreeStats ts = sc.tree_stats(j);
    trees.push_back({{"value", j},
                     {"nodes", ts.nodes},
                     {"elements", ts.elements},
                     {"max_depth", ts.max_depth}});
  }
  rep.emit({{"record", "summary"},
            {"mode", "cover-oracle"},
            {"z", z},
            {"ell", mc.ell()},
            {"n", t},
            {"finished_early", sc.finished_early()},
            {"kernel_size", kernel.size()},
            {"kernel", ids(kernel)},
            {"n_bound", bound},
            {"found", solution.has_value()},
            {"solution", solution ? ids(*solution) : Json(nullptr)},
            {"value_queries", stream_queries},
            {"extraction_value_queries", f.queries() - stream_queries},
            {"per_arrival_query_bound", static_bound},
            {"trees", trees},
            {"size_ok", size_ok},
            {"steps_ok", steps_ok}});
  return size_ok && steps_ok ? kExitOk : kExitBound;
}

int cmd_cover_color(const Options& o, Reporter& rep) {
  const Instance inst = load(o);
  const Matchoid mc = build_matchoid(inst);
  const CoverageInstance ci = build_coverage(inst);
  const std::size_t z = require_z(o);
  const auto z32 = static_cast<std::uint32_t>(z);
  const std::uint64_t u = repetitions(z32, o.eps);

  Json extra = Json::object();
  ColorCodingRun run;
  if (o.mode == "random") {
    run = randomized_driver(mc, ci, inst.stream_order, z, o.eps, o.seed, o.parallel);
  } else if (o.mode == "perfect") {
    std::vector<PointId> realized;
    for (const InstanceElement& e : inst.elements) {
      realized.insert(realized.end(), e.points->begin(), e.points->end());
    }
    const std::vector<HashFunction> family =
        perfect_family(z32, realized, ci.num_points(), o.seed);
    run = run_color_coding(mc, ci, inst.stream_order, z, family, o.parallel);
  } else {
    const BruteForceResult best = brute_max_coverage(mc, ci, z);
    const std::vector<PointId> planted = heaviest_points(ci, best.witness, z);
    std::optional<HashFunction> chosen;
    for (std::uint64_t i = 0; i < 100000 && !chosen; ++i) {
      HashFunction h = draw_hash(o.seed + i, z32, ci.num_points());
      if (check_well_colored([&h](PointId p) { return h(p); }, planted)) chosen = h;
    }
    if (!chosen) throw InputError("no seed colors the planted points injectively");
    const HashFunction family[] = {*chosen};
    run = run_color_coding(mc, ci, inst.stream_order, z, family, o.parallel);
    extra = {{"planted_points", planted},
             {"planted_seed", chosen->seed()},
             {"brute_value", format_weight(best.value)}};
  }

  const WeightedSolution sol = extract_weighted_solution(run.kernel, mc, z, ci);
  const std::uint64_t g = gamma(mc.ell(), z);
  const std::uint32_t zb = zbar(z32);
  const std::uint64_t per_hash = ((std::uint64_t{1} << zb) - 1) * g;
  const bool rep_ok = run.max_rep_size <= g;
  const bool run_ok = run.max_run_kernel <= per_hash;
  const bool points_ok = run.max_points_kept <= zb;
  Json summary = {{"record", "summary"},
                  {"mode", "cover-color"},
                  {"hash_mode", o.mode},
                  {"z", z},
                  {"zbar", zb},
                  {"ell", mc.ell()},
                  {"eps", o.eps},
                  {"seed", o.seed},
                  {"repetitions", u},
                  {"runs", run.runs},
                  {"seeds", run.seeds},
                  {"kernel_size", run.kernel.size()},
                  {"kernel", ids(run.kernel)},
                  {"solution", ids(sol.set)},
                  {"value", format_weight(sol.value)},
                  {"independence_queries", run.independence_queries},
                  {"max_rep_size", run.max_rep_size},
                  {"gamma", g},
                  {"max_run_kernel", run.max_run_kernel},
                  {"run_kernel_bound", per_hash},
                  {"max_points_kept", run.max_points_kept},
                  {"points_within_z", run.max_points_kept <= z},
                  {"rep_ok", rep_ok},
                  {"run_ok", run_ok},
                  {"points_ok", points_ok}};
  for (auto& [key, value] : extra.items()) summary[key] = value;
  rep.emit(summary);
  return rep_ok && run_ok && points_ok ? kExitOk : kExitBound;
}

// ---------------------------------------------------------------------------

bool close_enough(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

int cmd_verify(const Options& o, Reporter& rep) {
  if (o.report.empty()) throw InputError("--report is required");
  const Instance inst = load(o);
  const Matchoid mc = build_matchoid(inst);

  std::ifstream in(o.report);
  if (!in) throw InputError("cannot open report " + o.report);
  std::optional<Json> summary;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json rec;
    try {
      rec = Json::parse(line);
    } catch (const Json::parse_error& err) {
      throw InputError(std::string("report: ") + err.what());
    }
    if (rec.value("record", "") == "summary") summary = std::move(rec);
  }
  if (!summary) throw InputError("report has no summary record");
  const Json& s = *summary;
  const std::string mode = s.value("mode", "");

  std::vector<std::string> failures;
  std::size_t checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  };

  try {
    const ElementSet kernel = parse_ids(s.at("kernel"), "kernel");
    expect(is_subset(kernel, mc.universe()), "kernel contains unknown elements");
    expect(s.at("kernel_size").get<std::size_t>() == kernel.size(), "kernel_size mismatch");

    if (mode == "kernel" || mode == "stream") {
      const WeightFn w = build_weights(inst);
      const std::size_t k = s.at("k").get<std::size_t>();
      const ElementSet sol = parse_ids(s.at("solution"), "solution");
      const double value = parse_weight(s.at("value").get<std::string>());
      expect(is_subset(sol, kernel), "solution is not inside the kernel");
      expect(sol.size() <= k, "solution has more than k elements");
      expect(feasible_uncounted(mc, sol), "solution is infeasible");
      expect(w.total(sol) == value, "reported value differs from the solution's weight");
      const std::uint64_t g = gamma(mc.ell(), k);
      expect(s.at("gamma").get<std::uint64_t>() == g, "gamma mismatch");
      expect(s.at("size_ok").get<bool>() ==
                 ((mode == "kernel" ? kernel.size() : s.at("peak_rep_size").get<std::size_t>()) <= g),
             "size flag disagrees with the counters");
      if (mc.universe().size() <= 20) {
        const BruteForceResult bf = brute_max_weight_feasible(mc, w, k);
        expect(close_enough(bf.value, value), "value differs from the brute-force optimum " +
                                                  format_weight(bf.value));
      }
      if (mc.universe().size() <= 14) {
        const RepSetCheck c = check_joint_rep_set(kernel, mc.universe(), mc, w, k);
        expect(c.ok, "kernel is not representative: B = " + to_string(c.b_set) +
                         ", b = " + std::to_string(to_index(c.b)));
      }
    } else if (mode == "cover-oracle") {
      const CoverageInstance ci = build_coverage(inst);
      require_unweighted(ci);
      const std::size_t z = s.at("z").get<std::size_t>();
      const bool found = s.at("found").get<bool>();
      if (found) {
        const ElementSet sol = parse_ids(s.at("solution"), "solution");
        expect(is_subset(sol, kernel), "solution is not inside the kernel");
        expect(sol.size() <= z, "solution has more than z elements");
        expect(feasible_uncounted(mc, sol), "solution is infeasible");
        expect(ci.covered(sol).size() >= z, "solution covers fewer than z points");
      }
      if (mc.universe().size() <= 16) {
        const BruteForceResult bf = brute_max_coverage(mc, ci, z);
        expect((bf.value >= static_cast<double>(z)) == found,
               "brute force disagrees on whether z points can be covered");
      }
      expect(s.at("size_ok").get<bool>() ==
                 (s.at("finished_early").get<bool>() ||
                  kernel.size() <= s.at("n_bound").get<std::uint64_t>()),
             "size flag disagrees with the counters");
    } else if (mode == "cover-color") {
      const CoverageInstance ci = build_coverage(inst);
      const std::size_t z = s.at("z").get<std::size_t>();
      const ElementSet sol = parse_ids(s.at("solution"), "solution");
      const double value = parse_weight(s.at("value").get<std::string>());
      expect(is_subset(sol, kernel), "solution is not inside the kernel");
      expect(sol.size() <= z, "solution has more than z elements");
      expect(feasible_uncounted(mc, sol), "solution is infeasible");
      expect(ci.top_weight(sol, z) == value, "reported value differs from the solution's weight");
      expect(s.at("repetitions").get<std::uint64_t>() ==
                 repetitions(static_cast<std::uint32_t>(z), s.at("eps").get<double>()),
             "repetition count mismatch");
      if (s.value("hash_mode", "") == "planted" && mc.universe().size() <= 16) {
        const BruteForceResult bf = brute_max_coverage(mc, ci, z);
        expect(value >= bf.value || close_enough(value, bf.value),
               "planted run misses the brute-force optimum " + format_weight(bf.value));
      }
    } else {
      throw InputError("report mode '" + mode + "' cannot be verified");
    }
  } catch (const nlohmann::json::exception& err) {
    throw InputError(std::string("report: ") + err.what());
  }

  rep.emit({{"record", "verify"},
            {"mode", mode},
            {"checks", checks},
            {"failures", failures},
            {"ok", failures.empty()}});
  return failures.empty() ? kExitOk : kExitVerify;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Representative-set kernels for matchoid-constrained coverage"};
  app.name("repkernel-cli");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "Instance file");
    sub->add_option("--report", o.report, "Also write the records to this file");
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--generator", o.generator)
      ->check(CLI::IsMember({"matchoid", "coverage", "graph"}));
  gen->add_option("--out", o.out, "Output path (stdout when omitted)");
  gen->add_option("--n", o.n, "Elements");
  gen->add_option("--s", o.s, "Matroids");
  gen->add_option("--ell", o.ell, "Largest number of grounds per element");
  gen->add_option("--m", o.m, "Points (coverage)");
  gen->add_option("--max-set", o.max_set, "Largest point set (coverage)");
  gen->add_flag("--weighted", o.weighted, "Random point weights (coverage)");
  gen->add_option("--kinds", o.kinds, "Comma-separated matroid kinds");
  gen->add_option("--vertices", o.vertices, "Vertices (graph)");
  gen->add_option("--edges", o.edges, "Edges as u-v,u-v (graph)");
  gen->add_option("--k", o.k, "Suggested k stored in the metadata");
  gen->add_option("--seed", o.seed);

  CLI::App* kernel = app.add_subcommand("kernel", "Offline kernel and exact solution");
  add_common(kernel);
  kernel->add_option("--k", o.k);

  CLI::App* stream = app.add_subcommand("stream", "Streaming representative set");
  add_common(stream);
  stream->add_option("--k", o.k);

  CLI::App* oracle = app.add_subcommand("cover-oracle", "Unweighted coverage via value queries");
  add_common(oracle);
  oracle->add_option("--z", o.z);
  oracle->add_flag("--literal", o.literal, "Test children against every stored element");

  CLI::App* color = app.add_subcommand("cover-color", "Weighted coverage via color coding");
  add_common(color);
  color->add_option("--z", o.z);
  color->add_option("--eps", o.eps);
  color->add_option("--seed", o.seed);
  color->add_option("--mode", o.mode)->check(CLI::IsMember({"random", "perfect", "planted"}));
  color->add_option("--parallel", o.parallel, "Worker threads for repetitions");

  CLI::App* verify = app.add_subcommand("verify", "Check a report against brute force");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Reporter rep(out);
  int code = kExitOk;
  try {
    if (gen->parsed()) code = cmd_gen(o, rep, out);
    else if (kernel->parsed()) code = cmd_kernel(o, rep);
    else if (stream->parsed()) code = cmd_stream(o, rep);
    else if (oracle->parsed()) code = cmd_cover_oracle(o, rep);
    else if (color->parsed()) code = cmd_cover_color(o, rep);
    else code = cmd_verify(o, rep);
    if (!verify->parsed()) rep.save(o.report);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const StreamError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const FamilyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return code;
}

}  // namespace repkernel::cli
