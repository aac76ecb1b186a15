#include "ramsey/witness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey::witness {

void ColoringInstance::validate() const {
  if (colors < 1) throw std::invalid_argument("colors must be >= 1");
  if (n_smalls == 0 && !induced.empty())
    throw std::invalid_argument("placements require a non-empty small family");
  for (const auto& set : induced) {
    if (set.empty()) throw std::invalid_argument("induced sets must be non-empty");
    if (!std::is_sorted(set.begin(), set.end()))
      throw std::invalid_argument("induced sets must be sorted");
    if (set.front() < 0 || set.back() >= n_smalls)
      throw std::invalid_argument("induced small index out of range");
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::witness: return "witness";
    case Verdict::not_witness: return "not_witness";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

bool recheck_bad_coloring(const ColoringInstance& inst, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != inst.n_smalls) return false;
  for (const auto& set : inst.induced) {
    bool mono = true;
    for (int idx : set)
      if (coloring[idx] != coloring[set.front()]) { mono = false; break; }
    if (mono) return false;
  }
  return true;
}

namespace {

// Mutable DFS state over one instance.
struct SearchState {
  const ColoringInstance& inst;
  std::vector<std::vector<int>> containing;  // small -> placements
  std::vector<int> color;                    // per small, -1 unassigned
  std::vector<int> mono_color;               // per placement, -1 none yet
  std::vector<int> assigned_in;              // per placement
  std::vector<char> dead;
  std::vector<int> live_count;  // per small: live placements containing it
  int num_assigned = 0;
  int max_color_used = -1;  // colors 0..max_color_used appear

  explicit SearchState(const ColoringInstance& i)
      : inst(i),
        containing(i.n_smalls),
        color(i.n_smalls, -1),
        mono_color(i.n_placements(), -1),
        assigned_in(i.n_placements(), 0),
        dead(i.n_placements(), 0),
        live_count(i.n_smalls, 0) {
    for (int p = 0; p < i.n_placements(); ++p)
      for (int s : i.induced[p]) containing[s].push_back(p);
    for (int s = 0; s < i.n_smalls; ++s) live_count[s] = static_cast<int>(containing[s].size());
  }

  struct Undo {
    int small;
    std::vector<int> newly_dead;
    std::vector<int> first_colored;  // placements whose mono_color was set here
    bool max_color_bumped = false;
  };

  // Returns false when some placement became fully assigned monochromatic
  // (the branch is then pruned by the caller; the undo still applies).
  bool assign(int s, int v, Undo& undo) {
    undo.small = s;
    undo.newly_dead.clear();
    undo.first_colored.clear();
    undo.max_color_bumped = v > max_color_used;
    if (undo.max_color_bumped) max_color_used = v;
    color[s] = v;
    ++num_assigned;
    bool ok = true;
    for (int p : containing[s]) {
      if (dead[p]) { ++assigned_in[p]; continue; }
      ++assigned_in[p];
      if (mono_color[p] < 0) {
        mono_color[p] = v;
        undo.first_colored.push_back(p);
      } else if (mono_color[p] != v) {
        dead[p] = 1;
        undo.newly_dead.push_back(p);
        for (int q : inst.induced[p]) --live_count[q];
      }
      if (!dead[p] && assigned_in[p] == static_cast<int>(inst.induced[p].size())) ok = false;
    }
    return ok;
  }

  void undo_assign(const Undo& undo) {
    const int s = undo.small;
    for (int p : undo.newly_dead) {
      dead[p] = 0;
      for (int q : inst.induced[p]) ++live_count[q];
    }
    for (int p : undo.first_colored) mono_color[p] = -1;
    for (int p : containing[s]) --assigned_in[p];
    color[s] = -1;
    --num_assigned;
    if (undo.max_color_bumped) {
      max_color_used = -1;
      for (int c : color) max_color_used = std::max(max_color_used, c);
    }
  }

  bool all_placements_dead() const {
    for (char d : dead)
      if (!d) return false;
    return true;
  }

  // Branching heuristic: unassigned small in the most live placements,
  // smallest index on ties.
  int pick_small() const {
    int best = -1, best_count = -1;
    for (int s = 0; s < inst.n_smalls; ++s)
      if (color[s] < 0 && live_count[s] > best_count) {
        best = s;
        best_count = live_count[s];
      }
    return best;
  }

  std::vector<int> completed_bad() const {
    std::vector<int> full(color);
    for (auto& c : full)
      if (c < 0) c = 0;
    return full;
  }

  void replay(const std::vector<int>& partial) {
    Undo undo;
    for (int s = 0; s < inst.n_smalls; ++s)
      if (partial[s] >= 0) {
        if (!assign(s, partial[s], undo))
          throw std::logic_error("replayed prefix contains a monochromatic placement");
      }
  }
};

struct DfsOutcome {
  std::optional<std::vector<int>> bad;
  long long nodes = 0;
  bool budget_hit = false;
};

// First bad coloring in branch order, within the node budget.
void dfs(SearchState& st, long long budget, DfsOutcome& out) {
  if (out.bad || out.budget_hit) return;
  if (++out.nodes > budget) {
    out.budget_hit = true;
    return;
  }
  if (st.all_placements_dead()) {
    out.bad = st.completed_bad();
    return;
  }
  const int s = st.pick_small();
  if (s < 0) {
    // fully assigned, some placement alive => it is monochromatic-complete;
    // assign() prunes that earlier, so this point is unreachable
    return;
  }
  const int top = std::min(st.max_color_used + 1, st.inst.colors - 1);
  for (int v = 0; v <= top; ++v) {
    SearchState::Undo undo;
    const bool viable = st.assign(s, v, undo);
    if (viable) dfs(st, budget, out);
    st.undo_assign(undo);
    if (out.bad || out.budget_hit) return;
  }
}

// Deterministic frontier expansion: truncated DFS collecting the partial
// assignments at the given depth.  Bad colorings completed above the split
// depth land in shallow_bads.
struct Frontier {
  std::vector<std::vector<int>> subproblems;  // partial color vectors
  std::vector<std::vector<int>> shallow_bads;
  long long nodes = 0;
};

void expand(SearchState& st, int depth_limit, Frontier& out) {
  ++out.nodes;
  if (st.all_placements_dead()) {
    out.shallow_bads.push_back(st.completed_bad());
    return;
  }
  if (st.num_assigned == depth_limit) {
    out.subproblems.push_back(st.color);
    return;
  }
  const int s = st.pick_small();
  if (s < 0) return;
  const int top = std::min(st.max_color_used + 1, st.inst.colors - 1);
  for (int v = 0; v <= top; ++v) {
    SearchState::Undo undo;
    const bool viable = st.assign(s, v, undo);
    if (viable) expand(st, depth_limit, out);
    st.undo_assign(undo);
  }
}

int split_depth(const ColoringInstance& inst, int split_target) {
  int depth = 0;
  long long reach = 1;
  while (depth < inst.n_smalls && reach < split_target) {
    reach *= std::max(2, inst.colors);
    ++depth;
  }
  return depth;
}

}  // namespace

WitnessResult decide_witness(const ColoringInstance& inst, const EngineOptions& opts) {
  inst.validate();
  const auto start = std::chrono::steady_clock::now();
  WitnessResult result;

  Frontier frontier;
  {
    SearchState st(inst);
    expand(st, split_depth(inst, opts.split_target), frontier);
  }
  result.nodes = frontier.nodes;

  const int n_sub = static_cast<int>(frontier.subproblems.size());
  std::vector<DfsOutcome> outcomes(n_sub);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel && n_sub > 1)
#endif
  for (int i = 0; i < n_sub; ++i) {
    SearchState st(inst);
    st.replay(frontier.subproblems[i]);
    dfs(st, opts.node_budget, outcomes[i]);
  }

  std::optional<std::vector<int>> best = std::nullopt;
  bool any_budget_hit = false;
  for (const auto& bad : frontier.shallow_bads)
    if (!best || bad < *best) best = bad;
  for (const auto& oc : outcomes) {
    result.nodes += oc.nodes;
    any_budget_hit = any_budget_hit || oc.budget_hit;
    if (oc.bad && (!best || *oc.bad < *best)) best = oc.bad;
  }

  if (best) {
    if (!recheck_bad_coloring(inst, *best))
      throw std::logic_error("engine produced a coloring that fails the independent re-check");
    result.verdict = Verdict::not_witness;
    result.bad_coloring = *best;
  } else if (any_budget_hit) {
    result.verdict = Verdict::inconclusive;
  } else {
    result.verdict = Verdict::witness;
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

WitnessResult decide_witness_reference(const ColoringInstance& inst, long long node_budget) {
  inst.validate();
  WitnessResult result;
  SearchState st(inst);
  DfsOutcome out;
  dfs(st, node_budget, out);
  result.nodes = out.nodes;
  if (out.bad) {
    if (!recheck_bad_coloring(inst, *out.bad))
      throw std::logic_error("engine produced a coloring that fails the independent re-check");
    result.verdict = Verdict::not_witness;
    result.bad_coloring = *out.bad;
  } else if (out.budget_hit) {
    result.verdict = Verdict::inconclusive;
  } else {
    result.verdict = Verdict::witness;
  }
  return result;
}

WitnessResult naive_oracle(const ColoringInstance& inst, long long coloring_cap) {
  inst.validate();
  WitnessResult result;
  long long total = 1;
  for (int i = 0; i < inst.n_smalls; ++i) {
    total *= inst.colors;
    if (total > coloring_cap) {
      result.verdict = Verdict::inconclusive;
      return result;
    }
  }
  std::vector<int> coloring(inst.n_smalls, 0);
  for (long long it = 0; it < total; ++it) {
    ++result.nodes;
    if (recheck_bad_coloring(inst, coloring)) {
      result.verdict = Verdict::not_witness;
      result.bad_coloring = coloring;
      return result;
    }
    int pos = inst.n_smalls - 1;
    while (pos >= 0 && coloring[pos] == inst.colors - 1) coloring[pos--] = 0;
    if (pos < 0) break;
    ++coloring[pos];
  }
  result.verdict = Verdict::witness;
  return result;
}

std::optional<InstanceKind> instance_kind_from_string(std::string_view name) {
  if (name == "dual-tree") return InstanceKind::dual_tree;
  if (name == "leeb") return InstanceKind::leeb;
  if (name == "gr") return InstanceKind::gr;
  if (name == "gr-homogeneous") return InstanceKind::gr_homogeneous;
  return std::nullopt;
}

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::dual_tree: return "dual-tree";
    case InstanceKind::leeb: return "leeb";
    case InstanceKind::gr: return "gr";
    case InstanceKind::gr_homogeneous: return "gr-homogeneous";
  }
  return "?";
}

namespace {

// Index maps keyed by image tuple; source/target trees are fixed per family.
std::map<std::vector<int>, int> index_by_tuple(const std::vector<TreeMap>& maps) {
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < maps.size(); ++i) idx.emplace(maps[i].image_of, static_cast<int>(i));
  return idx;
}

}  // namespace

ColoringInstance build_dual_tree_instance(const OrderedTree& s, const OrderedTree& t,
                                          const OrderedTree& u, int colors, bool sealed_only) {
  ColoringInstance inst;
  inst.colors = colors;
  auto smalls = enumerate_rigid_surjections(u, s, sealed_only);
  auto placements = enumerate_rigid_surjections(u, t, sealed_only);
  auto connectors = enumerate_rigid_surjections(t, s, sealed_only);
  if (connectors.empty() && !placements.empty())
    throw std::invalid_argument(
        "degenerate instance: no rigid surjections from the placement tree onto the small tree");
  inst.n_smalls = static_cast<int>(smalls.size());
  auto idx = index_by_tuple(smalls);
  for (const auto& m : smalls) inst.small_labels.push_back(format_map(m));
  for (const auto& g0 : placements) {
    std::vector<int> set;
    for (const auto& f : connectors) {
      auto it = idx.find(compose(f, g0).image_of);
      if (it == idx.end()) throw std::logic_error("composition left the small family");
      set.push_back(it->second);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    inst.induced.push_back(std::move(set));
    inst.placement_labels.push_back(format_map(g0));
  }
  inst.validate();
  return inst;
}

ColoringInstance build_leeb_instance(const OrderedTree& s, const OrderedTree& t,
                                     const OrderedTree& u, int colors) {
  ColoringInstance inst;
  inst.colors = colors;
  auto smalls = enumerate_embeddings(s, u);
  auto placements = enumerate_embeddings(t, u);
  auto inner = enumerate_embeddings(s, t);
  if (inner.empty() && !placements.empty())
    throw std::invalid_argument("degenerate instance: the small tree does not embed into the placement tree");
  inst.n_smalls = static_cast<int>(smalls.size());
  auto idx = index_by_tuple(smalls);
  for (const auto& m : smalls) inst.small_labels.push_back(format_map(m));
  for (const auto& et : placements) {
    std::vector<int> set;
    for (const auto& h : inner) {
      auto it = idx.find(compose(et, h).image_of);
      if (it == idx.end()) throw std::logic_error("embedding composition left the copy family");
      set.push_back(it->second);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    inst.induced.push_back(std::move(set));
    inst.placement_labels.push_back(format_map(et));
  }
  inst.validate();
  return inst;
}

ColoringInstance build_gr_instance(int k, int l, int m, int colors, bool homogeneous) {
  if (!(1 <= k && k <= l && l <= m)) throw std::invalid_argument("need 1 <= k <= l <= m");
  ColoringInstance inst;
  inst.colors = colors;
  auto smalls = enumerate_partitions(m, k, homogeneous);
  auto placements = enumerate_partitions(m, l, homogeneous);
  inst.n_smalls = static_cast<int>(smalls.size());
  for (const auto& p : smalls) inst.small_labels.push_back(p.format());
  for (const auto& q : placements) {
    std::vector<int> set;
    for (int i = 0; i < inst.n_smalls; ++i)
      if (is_subpartition(smalls[i], q)) set.push_back(i);
    if (set.empty())
      throw std::invalid_argument("degenerate instance: a placement partition induces no small partitions");
    inst.induced.push_back(std::move(set));
    inst.placement_labels.push_back(q.format());
  }
  inst.validate();
  return inst;
}

namespace {

MinWitnessResult scan_candidates(const std::vector<std::string>& labels,
                                 const std::vector<ColoringInstance>& instances,
                                 const EngineOptions& opts) {
  MinWitnessResult out;
  for (size_t i = 0; i < labels.size(); ++i) {
    WitnessResult r = decide_witness(instances[i], opts);
    out.candidates.push_back({labels[i], r});
    if (r.verdict == Verdict::inconclusive) {
      out.inconclusive = true;
      return out;
    }
    if (r.verdict == Verdict::witness) {
      out.found = true;
      out.witness_label = labels[i];
      return out;
    }
  }
  return out;
}

}  // namespace

MinWitnessResult search_min_witness_trees(InstanceKind kind, const OrderedTree& s,
                                          const OrderedTree& t, int colors, int max_size,
                                          bool sealed_only, const EngineOptions& opts) {
  std::vector<std::string> labels;
  std::vector<ColoringInstance> instances;
  for (const auto& u : enumerate_trees(max_size)) {
    ColoringInstance inst;
    try {
      inst = kind == InstanceKind::dual_tree
                 ? build_dual_tree_instance(s, t, u, colors, sealed_only)
                 : build_leeb_instance(s, t, u, colors);
    } catch (const std::invalid_argument&) {
      continue;  // degenerate (S,T) pairing; no candidate can change that
    }
    labels.push_back(u.encode());
    instances.push_back(std::move(inst));
  }
  return scan_candidates(labels, instances, opts);
}

MinWitnessResult search_min_witness_gr(int k, int l, int colors, int max_size, bool homogeneous,
                                       const EngineOptions& opts) {
  std::vector<std::string> labels;
  std::vector<ColoringInstance> instances;
  for (int m = l; m <= max_size; ++m) {
    ColoringInstance inst;
    try {
      inst = build_gr_instance(k, l, m, colors, homogeneous);
    } catch (const std::invalid_argument&) {
      continue;  // homogeneous divisibility mismatch leaves empty induced sets
    }
    labels.push_back(std::to_string(m));
    instances.push_back(std::move(inst));
  }
  return scan_candidates(labels, instances, opts);
}

}  // namespace ramsey::witness
