// Command-line front door: enumeration, axiom checking, witness search, the
// convex-weights sweep, and full-set checks, with deterministic JSON output.
//
// Exit codes: 0 decisive verdict (including negative ones), 1 usage or input
// error, 2 inconclusive (a budget or cap was hit).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "ramsey/framework.hpp"
#include "ramsey/fullsets.hpp"
#include "ramsey/moore.hpp"
#include "ramsey/partition.hpp"
#include "ramsey/tree.hpp"
#include "ramsey/tree_map.hpp"
#include "ramsey/witness.hpp"

using json = nlohmann::ordered_json;
using namespace ramsey;

namespace {

constexpr long long kDefaultBudget = 10'000'000;
constexpr long long kDefaultCap = 1 << 20;

struct CommonFlags {
  int workers = 0;
  std::string output = "json";
  long long budget = kDefaultBudget;
  long long cap = 0;  // 0 = default (env override applies)
};

long long effective_cap(const CommonFlags& flags) {
  if (flags.cap > 0) return flags.cap;
  if (const char* env = std::getenv("RAMSEY_FORGE_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--workers", flags.workers, "worker threads (0 = library default)");
  cmd->add_option("--output", flags.output, "output mode: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--budget", flags.budget, "search-node budget per subproblem")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cap", flags.cap, "coloring-count cap for exhaustive sweeps")
      ->check(CLI::PositiveNumber);
}

void apply_workers(const CommonFlags& flags) {
#ifdef _OPENMP
  if (flags.workers > 0) omp_set_num_threads(flags.workers);
#endif
}

void flatten(const json& value, const std::string& prefix, std::ostream& os) {
  if (value.is_object()) {
    for (const auto& [key, sub] : value.items())
      flatten(sub, prefix.empty() ? key : prefix + "." + key, os);
  } else if (value.is_array()) {
    for (size_t i = 0; i < value.size(); ++i)
      flatten(value[i], prefix + "[" + std::to_string(i) + "]", os);
    if (value.empty()) os << prefix << ": []\n";
  } else {
    os << prefix << ": " << value.dump() << "\n";
  }
}

void emit(const json& out, const CommonFlags& flags) {
  if (flags.output == "table")
    flatten(out, "", std::cout);
  else
    std::cout << out.dump(2) << "\n";
}

OrderedTree tree_arg(const std::string& text, const std::string& flag) {
  try {
    return OrderedTree::decode(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

// key=value lines feeding tree arguments, for batch runs
void load_file_args(const std::string& path, std::map<std::string, std::string>& into) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--file", "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--file", "expected key=value: " + line);
    into[line.substr(0, eq)] = line.substr(eq + 1);
  }
}

json verdict_json(const witness::WitnessResult& r) {
  json out;
  out["verdict"] = to_string(r.verdict);
  out["bad_coloring"] =
      r.verdict == witness::Verdict::not_witness ? json(r.bad_coloring) : json(nullptr);
  out["nodes"] = r.nodes;
  return out;
}

json axiom_items(const framework::AxiomReport& report) {
  json items = json::array();
  for (const auto& item : report.items) {
    json row;
    row["axiom"] = item.axiom;
    row["pass"] = item.pass;
    row["witness"] = item.pass ? json(nullptr) : json(item.witness);
    items.push_back(std::move(row));
  }
  return items;
}

json fragment_dump(const framework::TreeInstance& inst) {
  json out;
  out["trees"] = json::array();
  for (const auto& t : inst.trees) out["trees"].push_back(t.encode());
  out["points"] = json::array();
  for (const auto& f : inst.points) out["points"].push_back(format_map(f));
  auto table_json = [](const framework::Table& table) {
    json rows = json::array();
    for (size_t i = 0; i < table.size(); ++i)
      for (size_t j = 0; j < table[i].size(); ++j)
        if (table[i][j] >= 0) rows.push_back({(int)i, (int)j, table[i][j]});
    return rows;
  };
  out["mult"] = table_json(inst.space.mult);
  out["trunc"] = inst.space.trunc;
  out["norm"] = inst.space.norm;
  out["sets"] = json::array();
  for (size_t i = 0; i < inst.domain.p_sets.size(); ++i) {
    json row;
    row["domain"] = inst.trees[inst.set_domain[i]].encode();
    row["image"] = inst.trees[inst.set_image[i]].encode();
    row["elements"] = inst.domain.p_sets[i];
    out["sets"].push_back(std::move(row));
  }
  out["set_mult"] = table_json(inst.domain.set_mult);
  out["set_act"] = table_json(inst.domain.set_act);
  out["set_trunc"] = inst.domain.set_trunc;
  return out;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"finite dual-Ramsey search & verification"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- trees enumerate -------------------------------------------------
  auto* trees_cmd = app.add_subcommand("trees", "ordered-tree operations")->require_subcommand(1);
  auto* trees_enum = trees_cmd->add_subcommand("enumerate", "list canonical trees");
  struct {
    int max_nodes = 4;
    int binary_leaves = 0;
    CommonFlags common;
  } te;
  trees_enum->add_option("--max-nodes", te.max_nodes, "largest node count")->required();
  trees_enum->add_option("--binary-leaves", te.binary_leaves,
                         "keep only binary trees with this many leaves");
  add_common(trees_enum, te.common);
  trees_enum->callback([&] {
    apply_workers(te.common);
    const auto trees = enumerate_trees(
        te.max_nodes, te.binary_leaves > 0 ? std::optional<int>(te.binary_leaves) : std::nullopt);
    json out;
    out["command"] = "trees enumerate";
    out["max_nodes"] = te.max_nodes;
    out["binary_leaves"] = te.binary_leaves > 0 ? json(te.binary_leaves) : json(nullptr);
    out["count"] = trees.size();
    std::vector<int> by_nodes(te.max_nodes + 1, 0);
    json list = json::array();
    for (const auto& t : trees) {
      ++by_nodes[t.size()];
      list.push_back(t.encode());
    }
    out["counts_by_nodes"] = std::vector<int>(by_nodes.begin() + 1, by_nodes.end());
    out["trees"] = std::move(list);
    emit(out, te.common);
  });

  // ---- maps enumerate --------------------------------------------------
  auto* maps_cmd = app.add_subcommand("maps", "tree-map operations")->require_subcommand(1);
  auto* maps_enum = maps_cmd->add_subcommand("enumerate", "list maps between two trees");
  struct {
    std::string source, target, kind = "rigid", file;
    CommonFlags common;
  } me;
  maps_enum->add_option("--source", me.source, "domain tree (text form)");
  maps_enum->add_option("--target", me.target, "image tree (text form)");
  maps_enum->add_option("--kind", me.kind, "rigid, sealed, or embedding")
      ->check(CLI::IsMember({"rigid", "sealed", "embedding"}));
  maps_enum->add_option("--file", me.file, "key=value file providing source/target");
  add_common(maps_enum, me.common);
  maps_enum->callback([&] {
    apply_workers(me.common);
    if (!me.file.empty()) {
      std::map<std::string, std::string> kv;
      load_file_args(me.file, kv);
      if (kv.count("source")) me.source = kv["source"];
      if (kv.count("target")) me.target = kv["target"];
    }
    if (me.source.empty() || me.target.empty())
      throw CLI::ValidationError("--source/--target", "both trees are required");
    const auto src = tree_arg(me.source, "--source");
    const auto tgt = tree_arg(me.target, "--target");
    std::vector<TreeMap> maps;
    if (me.kind == "embedding") maps = enumerate_embeddings(src, tgt);
    else maps = enumerate_rigid_surjections(src, tgt, me.kind == "sealed");
    json out;
    out["command"] = "maps enumerate";
    out["source"] = src.encode();
    out["target"] = tgt.encode();
    out["kind"] = me.kind;
    out["count"] = maps.size();
    json list = json::array();
    for (const auto& m : maps) list.push_back(format_map(m));
    out["maps"] = std::move(list);
    emit(out, me.common);
  });

  // ---- axioms check ------------------------------------------------------
  auto* axioms_cmd = app.add_subcommand("axioms", "fragment axiom checks")->require_subcommand(1);
  auto* axioms_check =
      axioms_cmd->add_subcommand("check", "build the sealed-surjection fragment and check it");
  struct {
    int max_nodes = 3;
    bool dump = false;
    CommonFlags common;
  } ac;
  axioms_check->add_option("--max-nodes", ac.max_nodes, "largest tree size in the fragment")
      ->required();
  axioms_check->add_flag("--dump", ac.dump, "include the fragment tables");
  add_common(axioms_check, ac.common);
  axioms_check->callback([&] {
    apply_workers(ac.common);
    const auto inst = framework::build_tree_instance(ac.max_nodes);
    const auto space_report = framework::check_space_axioms(inst.space);
    const auto domain_report = framework::check_domain_axioms(inst.space, inst.domain);
    json out;
    out["command"] = "axioms check";
    out["max_nodes"] = ac.max_nodes;
    out["points"] = inst.points.size();
    out["sets"] = inst.domain.p_sets.size();
    out["space"] = axiom_items(space_report);
    out["domain"] = axiom_items(domain_report);
    out["all_pass"] = space_report.all_pass() && domain_report.all_pass();
    if (ac.dump) out["fragment"] = fragment_dump(inst);
    emit(out, ac.common);
  });

  // ---- witness check / search --------------------------------------------
  auto* witness_cmd =
      app.add_subcommand("witness", "coloring-witness decisions")->require_subcommand(1);
  struct WitnessArgs {
    std::string instance;
    std::string s, t, u, file;
    int k = 0, l = 0, m = 0;
    int colors = 2;
    int max_size = 0;
    bool sealed = false;
    CommonFlags common;
  };

  auto add_witness_options = [](CLI::App* cmd, WitnessArgs& args, bool search) {
    cmd->add_option("--instance", args.instance, "dual-tree, leeb, gr, or gr-homogeneous")
        ->required();
    cmd->add_option("--s", args.s, "small tree S (text form)");
    cmd->add_option("--t", args.t, "placement tree T (text form)");
    if (!search) cmd->add_option("--u", args.u, "ambient tree U (text form)");
    cmd->add_option("--k", args.k, "small partition block count");
    cmd->add_option("--l", args.l, "placement partition block count");
    if (!search) cmd->add_option("--m", args.m, "ground set size");
    if (search) cmd->add_option("--max-size", args.max_size, "largest candidate size")->required();
    cmd->add_option("--colors,-c", args.colors, "number of colors");
    cmd->add_flag("--sealed", args.sealed, "restrict dual-tree families to sealed surjections");
    cmd->add_option("--file", args.file, "key=value file providing s/t/u");
  };

  auto resolve_trees = [](WitnessArgs& args) {
    if (!args.file.empty()) {
      std::map<std::string, std::string> kv;
      load_file_args(args.file, kv);
      if (kv.count("s")) args.s = kv["s"];
      if (kv.count("t")) args.t = kv["t"];
      if (kv.count("u")) args.u = kv["u"];
    }
  };

  WitnessArgs wc;
  auto* witness_check = witness_cmd->add_subcommand("check", "decide one instance");
  add_witness_options(witness_check, wc, false);
  add_common(witness_check, wc.common);
  witness_check->callback([&] {
    apply_workers(wc.common);
    resolve_trees(wc);
    const auto kind = witness::instance_kind_from_string(wc.instance);
    if (!kind) throw CLI::ValidationError("--instance", "unknown instance kind " + wc.instance);
    witness::ColoringInstance inst;
    json params;
    if (*kind == witness::InstanceKind::gr || *kind == witness::InstanceKind::gr_homogeneous) {
      inst = witness::build_gr_instance(wc.k, wc.l, wc.m, wc.colors,
                                        *kind == witness::InstanceKind::gr_homogeneous);
      params = {{"k", wc.k}, {"l", wc.l}, {"m", wc.m}};
    } else {
      if (wc.s.empty() || wc.t.empty() || wc.u.empty())
        throw CLI::ValidationError("--s/--t/--u", "tree instances need all three trees");
      const auto s = tree_arg(wc.s, "--s");
      const auto t = tree_arg(wc.t, "--t");
      const auto u = tree_arg(wc.u, "--u");
      inst = *kind == witness::InstanceKind::dual_tree
                 ? witness::build_dual_tree_instance(s, t, u, wc.colors, wc.sealed)
                 : witness::build_leeb_instance(s, t, u, wc.colors);
      params = {{"s", s.encode()}, {"t", t.encode()}, {"u", u.encode()}};
      if (*kind == witness::InstanceKind::dual_tree) params["sealed"] = wc.sealed;
    }
    witness::EngineOptions opts;
    opts.node_budget = wc.common.budget;
    const auto result = decide_witness(inst, opts);
    json out;
    out["command"] = "witness check";
    out["instance"] = wc.instance;
    out["params"] = std::move(params);
    out["colors"] = wc.colors;
    out["smalls"] = inst.n_smalls;
    out["placements"] = inst.n_placements();
    out["placements_empty"] = inst.induced.empty();
    out.update(verdict_json(result));
    out["candidates_tried"] = 1;
    emit(out, wc.common);
    if (result.verdict == witness::Verdict::inconclusive) exit_code = 2;
  });

  WitnessArgs ws;
  auto* witness_search =
      witness_cmd->add_subcommand("search", "scan candidates for the least witness");
  add_witness_options(witness_search, ws, true);
  add_common(witness_search, ws.common);
  witness_search->callback([&] {
    apply_workers(ws.common);
    resolve_trees(ws);
    const auto kind = witness::instance_kind_from_string(ws.instance);
    if (!kind) throw CLI::ValidationError("--instance", "unknown instance kind " + ws.instance);
    witness::EngineOptions opts;
    opts.node_budget = ws.common.budget;
    witness::MinWitnessResult result;
    json params;
    if (*kind == witness::InstanceKind::gr || *kind == witness::InstanceKind::gr_homogeneous) {
      result = witness::search_min_witness_gr(ws.k, ws.l, ws.colors, ws.max_size,
                                              *kind == witness::InstanceKind::gr_homogeneous, opts);
      params = {{"k", ws.k}, {"l", ws.l}};
    } else {
      if (ws.s.empty() || ws.t.empty())
        throw CLI::ValidationError("--s/--t", "tree instances need both trees");
      const auto s = tree_arg(ws.s, "--s");
      const auto t = tree_arg(ws.t, "--t");
      result =
          witness::search_min_witness_trees(*kind, s, t, ws.colors, ws.max_size, ws.sealed, opts);
      params = {{"s", s.encode()}, {"t", t.encode()}};
      if (*kind == witness::InstanceKind::dual_tree) params["sealed"] = ws.sealed;
    }
    json out;
    out["command"] = "witness search";
    out["instance"] = ws.instance;
    out["params"] = std::move(params);
    out["colors"] = ws.colors;
    out["max_size"] = ws.max_size;
    out["verdict"] = result.found          ? "witness"
                     : result.inconclusive ? "inconclusive"
                                           : "not_witness";
    out["bad_coloring"] = nullptr;
    long long nodes = 0;
    for (const auto& cand : result.candidates) nodes += cand.result.nodes;
    out["nodes"] = nodes;
    out["candidates_tried"] = result.candidates.size();
    out["witness"] = result.found ? json(result.witness_label) : json(nullptr);
    json cands = json::array();
    for (const auto& cand : result.candidates) {
      json row;
      row["candidate"] = cand.label;
      row.update(verdict_json(cand.result));
      cands.push_back(std::move(row));
    }
    out["candidates"] = std::move(cands);
    emit(out, ws.common);
    if (result.inconclusive) exit_code = 2;
  });

  // ---- moore check ---------------------------------------------------------
  auto* moore_cmd = app.add_subcommand("moore", "convex-weights sweep")->require_subcommand(1);
  auto* moore_check_cmd = moore_cmd->add_subcommand("check", "sweep all colorings for one (m, n)");
  struct {
    int m = 2, n = 3;
    CommonFlags common;
  } mc;
  moore_check_cmd->add_option("--m", mc.m, "leaf count of the base trees")->required();
  moore_check_cmd->add_option("--n", mc.n, "leaf count of the colored trees")->required();
  add_common(moore_check_cmd, mc.common);
  moore_check_cmd->callback([&] {
    apply_workers(mc.common);
    if (mc.n < mc.m) throw CLI::ValidationError("--n", "need n >= m");
    const auto result = moore::moore_check(mc.m, mc.n, effective_cap(mc.common));
    json out;
    out["command"] = "moore check";
    out["m"] = mc.m;
    out["n"] = mc.n;
    out["colorings_checked"] = result.colorings_checked;
    out["verdict"] =
        result.inconclusive ? "inconclusive" : result.holds ? "holds" : "counterexample";
    out["counterexample"] =
        result.holds || result.inconclusive ? json(nullptr) : json(result.counterexample_bits);
    if (result.holds) {
      json alpha = json::array();
      for (const auto& v : result.sample_alpha) alpha.push_back(v.str());
      out["sample_alpha"] = std::move(alpha);
    } else {
      out["sample_alpha"] = nullptr;
    }
    emit(out, mc.common);
    if (result.inconclusive) exit_code = 2;
  });

  // ---- fullsets check --------------------------------------------------------
  auto* fullsets_cmd = app.add_subcommand("fullsets", "full-set sweeps")->require_subcommand(1);
  auto* fullsets_check =
      fullsets_cmd->add_subcommand("check", "sweep colorings of a product space");
  struct {
    std::vector<int> p, l, n;
    int colors = 2;
    bool show_space = false;
    CommonFlags common;
  } fc;
  fullsets_check->add_option("--p", fc.p, "prime modulus per factor")->required();
  fullsets_check->add_option("--l", fc.l, "domain slack per factor")->required();
  fullsets_check->add_option("--n", fc.n, "coordinate count per factor")->required();
  fullsets_check->add_option("--colors,-c", fc.colors, "number of colors");
  fullsets_check->add_flag("--show-space", fc.show_space, "list the factor spaces in text form");
  add_common(fullsets_check, fc.common);
  fullsets_check->callback([&] {
    apply_workers(fc.common);
    if (fc.p.size() != fc.l.size() || fc.p.size() != fc.n.size())
      throw CLI::ValidationError("--p/--l/--n", "factor lists must have equal length");
    std::vector<fullsets::FsFactor> factors;
    for (size_t i = 0; i < fc.p.size(); ++i) factors.push_back({fc.p[i], fc.l[i], fc.n[i]});
    const auto result = fullsets::fs_instance_check(factors, fc.colors, effective_cap(fc.common));
    json out;
    out["command"] = "fullsets check";
    out["p"] = fc.p;
    out["l"] = fc.l;
    out["n"] = fc.n;
    out["colors"] = fc.colors;
    json sizes = json::array();
    for (const auto& f : factors) sizes.push_back(fullsets::enumerate_space(f.n, f.l, f.p).size());
    out["space_sizes"] = std::move(sizes);
    if (fc.show_space) {
      json spaces = json::array();
      for (const auto& f : factors) {
        json texts = json::array();
        for (const auto& v : fullsets::enumerate_space(f.n, f.l, f.p))
          texts.push_back(fullsets::format_pv(v));
        spaces.push_back(std::move(texts));
      }
      out["spaces"] = std::move(spaces);
    }
    out["colorings_checked"] = result.colorings_checked;
    out["verdict"] =
        result.inconclusive ? "inconclusive" : result.holds ? "holds" : "counterexample";
    out["counterexample"] = result.counterexample >= 0 ? json(result.counterexample) : json(nullptr);
    out["counterexample_colors"] =
        result.counterexample >= 0 ? json(result.counterexample_colors) : json(nullptr);
    emit(out, fc.common);
    if (result.inconclusive) exit_code = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
