#include "ramsey/framework.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ramsey::framework {

namespace {

std::string fallback_name(const std::vector<std::string>& names, const char* prefix, int i) {
  if (i >= 0 && i < static_cast<int>(names.size())) return names[i];
  return std::string(prefix) + std::to_string(i);
}

AxiomCheck make_check(std::string name) {
  AxiomCheck c;
  c.axiom = std::move(name);
  return c;
}

}  // namespace

std::string CompositionSpaceFragment::a_name(int a) const { return fallback_name(a_names, "a", a); }
std::string CompositionSpaceFragment::x_name(int x) const { return fallback_name(x_names, "x", x); }
std::string RamseyDomainFragment::f_name(int f) const { return fallback_name(f_names, "F", f); }
std::string RamseyDomainFragment::p_name(int p) const { return fallback_name(p_names, "P", p); }

bool extends(const CompositionSpaceFragment& s, int b, int a) {
  for (int x = 0; x < s.n_x; ++x) {
    const int ax = s.act[a][x];
    if (ax < 0) continue;
    if (s.act[b][x] != ax) return false;
  }
  return true;
}

bool AxiomReport::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

const AxiomCheck& AxiomReport::item(const std::string& axiom) const {
  for (const auto& it : items)
    if (it.axiom == axiom) return it;
  throw std::out_of_range("no axiom named " + axiom);
}

AxiomReport check_space_axioms(const CompositionSpaceFragment& s) {
  AxiomReport report;

  AxiomCheck action = make_check("action-law");
  for (int a = 0; a < s.n_a && action.pass; ++a)
    for (int b = 0; b < s.n_a && action.pass; ++b) {
      const int ab = s.mult[a][b];
      if (ab < 0) continue;
      for (int x = 0; x < s.n_x; ++x) {
        const int bx = s.act[b][x];
        if (bx < 0) continue;
        const int lhs = s.act[a][bx];
        const int rhs = s.act[ab][x];
        if (lhs >= 0 && rhs >= 0 && lhs != rhs) {
          action.pass = false;
          action.witness = "a=" + s.a_name(a) + ", b=" + s.a_name(b) + ", x=" + s.x_name(x);
          break;
        }
      }
    }
  report.items.push_back(std::move(action));

  AxiomCheck ax1 = make_check("(i) truncation-commutes");
  for (int a = 0; a < s.n_a && ax1.pass; ++a)
    for (int x = 0; x < s.n_x; ++x) {
      const int ax_ = s.act[a][x];
      const int adx = s.act[a][s.trunc[x]];
      if (ax_ < 0 || adx < 0) continue;
      if (s.trunc[ax_] != adx) {
        ax1.pass = false;
        ax1.witness = "a=" + s.a_name(a) + ", x=" + s.x_name(x);
        break;
      }
    }
  report.items.push_back(std::move(ax1));

  AxiomCheck ax2 = make_check("(ii) norm-monotone-truncation");
  for (int x = 0; x < s.n_x; ++x)
    if (!s.norm_leq[s.norm[s.trunc[x]]][s.norm[x]]) {
      ax2.pass = false;
      ax2.witness = "x=" + s.x_name(x);
      break;
    }
  report.items.push_back(std::move(ax2));

  AxiomCheck ax3 = make_check("(iii) action-respects-norm");
  for (int a = 0; a < s.n_a && ax3.pass; ++a)
    for (int x = 0; x < s.n_x && ax3.pass; ++x)
      for (int y = 0; y < s.n_x; ++y) {
        if (!s.norm_leq[s.norm[x]][s.norm[y]]) continue;
        const int ay = s.act[a][y];
        if (ay < 0) continue;
        const int ax_ = s.act[a][x];
        if (ax_ < 0 || !s.norm_leq[s.norm[ax_]][s.norm[ay]]) {
          ax3.pass = false;
          ax3.witness = "a=" + s.a_name(a) + ", x=" + s.x_name(x) + ", y=" + s.x_name(y);
          break;
        }
      }
  report.items.push_back(std::move(ax3));

  return report;
}

namespace {

std::string set_text(const std::vector<int>& elems, const CompositionSpaceFragment& s, bool of_a) {
  std::string out = "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += of_a ? s.a_name(elems[i]) : s.x_name(elems[i]);
  }
  return out + "}";
}

}  // namespace

AxiomReport check_domain_axioms(const CompositionSpaceFragment& s, const RamseyDomainFragment& d) {
  AxiomReport report;
  const int nf = static_cast<int>(d.f_sets.size());
  const int np = static_cast<int>(d.p_sets.size());

  AxiomCheck pw_mult = make_check("pointwise-mult");
  for (int i = 0; i < nf && pw_mult.pass; ++i)
    for (int j = 0; j < nf; ++j) {
      const int k = d.set_mult[i][j];
      if (k < 0) continue;
      std::vector<int> prod;
      bool defined = true;
      for (int a : d.f_sets[i])
        for (int b : d.f_sets[j]) {
          const int ab = s.mult[a][b];
          if (ab < 0) { defined = false; break; }
          prod.push_back(ab);
        }
      std::sort(prod.begin(), prod.end());
      prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
      if (!defined || prod != d.f_sets[k]) {
        pw_mult.pass = false;
        pw_mult.witness = "F=" + d.f_name(i) + ", G=" + d.f_name(j);
        break;
      }
    }
  report.items.push_back(std::move(pw_mult));

  AxiomCheck pw_act = make_check("pointwise-act");
  for (int i = 0; i < nf && pw_act.pass; ++i)
    for (int j = 0; j < np; ++j) {
      const int k = d.set_act[i][j];
      if (k < 0) continue;
      std::vector<int> image;
      bool defined = true;
      for (int a : d.f_sets[i])
        for (int x : d.p_sets[j]) {
          const int ax = s.act[a][x];
          if (ax < 0) { defined = false; break; }
          image.push_back(ax);
        }
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!defined || image != d.p_sets[k]) {
        pw_act.pass = false;
        pw_act.witness = "F=" + d.f_name(i) + ", P=" + d.p_name(j);
        break;
      }
    }
  report.items.push_back(std::move(pw_act));

  AxiomCheck ax_a = make_check("(a) product-definedness");
  for (int f = 0; f < nf && ax_a.pass; ++f)
    for (int g = 0; g < nf && ax_a.pass; ++g)
      for (int p = 0; p < np; ++p) {
        const int gp = d.set_act[g][p];
        if (gp < 0) continue;
        if (d.set_act[f][gp] < 0) continue;
        const int fg = d.set_mult[f][g];
        if (fg < 0 || d.set_act[fg][p] < 0) {
          ax_a.pass = false;
          ax_a.witness = "F=" + d.f_name(f) + ", G=" + d.f_name(g) + ", P=" + d.p_name(p);
          break;
        }
      }
  report.items.push_back(std::move(ax_a));

  AxiomCheck ax_b = make_check("(b) truncation-closure");
  for (int p = 0; p < np; ++p) {
    std::vector<int> tr;
    for (int x : d.p_sets[p]) tr.push_back(s.trunc[x]);
    std::sort(tr.begin(), tr.end());
    tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
    const int t = d.set_trunc.empty() ? -1 : d.set_trunc[p];
    if (t < 0 || d.p_sets[t] != tr) {
      ax_b.pass = false;
      ax_b.witness = "P=" + d.p_name(p) + ", ∂P=" + set_text(tr, s, false);
      break;
    }
  }
  report.items.push_back(std::move(ax_b));

  AxiomCheck ax_c = make_check("(c) extension");
  for (int f = 0; f < nf && ax_c.pass; ++f)
    for (int p = 0; p < np; ++p) {
      const int tp = d.set_trunc.empty() ? -1 : d.set_trunc[p];
      if (tp < 0 || d.set_act[f][tp] < 0) continue;
      bool found = false;
      for (int g = 0; g < nf && !found; ++g) {
        if (d.set_act[g][p] < 0) continue;
        bool covers = true;
        for (int a : d.f_sets[f]) {
          bool has_ext = false;
          for (int b : d.f_sets[g])
            if (extends(s, b, a)) { has_ext = true; break; }
          if (!has_ext) { covers = false; break; }
        }
        found = covers;
      }
      if (!found) {
        ax_c.pass = false;
        ax_c.witness = "F=" + d.f_name(f) + ", P=" + d.p_name(p);
        break;
      }
    }
  report.items.push_back(std::move(ax_c));

  AxiomCheck vanish = make_check("vanishing");
  for (int p = 0; p < np; ++p) {
    std::vector<int> cur = d.p_sets[p];
    int steps = 0;
    while (cur.size() > 1 && steps <= s.n_x + 1) {
      std::vector<int> next;
      for (int x : cur) next.push_back(s.trunc[x]);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next == cur) break;  // stalled
      cur = std::move(next);
      ++steps;
    }
    if (cur.size() != 1) {
      vanish.pass = false;
      vanish.witness = "P=" + d.p_name(p);
      break;
    }
  }
  report.items.push_back(std::move(vanish));

  AxiomCheck linear = make_check("linear");
  for (int p = 0; p < np && linear.pass; ++p) {
    const auto& set = d.p_sets[p];
    for (size_t i = 0; i < set.size() && linear.pass; ++i)
      for (size_t j = i + 1; j < set.size(); ++j) {
        const int ni = s.norm[set[i]], nj = s.norm[set[j]];
        if (!s.norm_leq[ni][nj] && !s.norm_leq[nj][ni]) {
          linear.pass = false;
          linear.witness = "P=" + d.p_name(p) + ", x=" + s.x_name(set[i]) + ", y=" + s.x_name(set[j]);
          break;
        }
      }
  }
  report.items.push_back(std::move(linear));

  return report;
}

namespace {

// Verdict of "every coloring of the smalls admits a monochromatic
// placement" where placements are the elements f of family and the induced
// set of f is its action image over points.
witness::WitnessResult family_monochromatic(const CompositionSpaceFragment& s,
                                            const std::vector<int>& family,
                                            const std::vector<int>& points, int colors,
                                            const witness::EngineOptions& opts) {
  std::vector<int> smalls;
  for (int f : family)
    for (int x : points) {
      const int fx = s.act[f][x];
      if (fx < 0) throw std::logic_error("family action must be defined pointwise");
      smalls.push_back(fx);
    }
  std::sort(smalls.begin(), smalls.end());
  smalls.erase(std::unique(smalls.begin(), smalls.end()), smalls.end());

  witness::ColoringInstance inst;
  inst.colors = colors;
  inst.n_smalls = static_cast<int>(smalls.size());
  for (int f : family) {
    std::vector<int> set;
    for (int x : points) {
      const int fx = s.act[f][x];
      const auto it = std::lower_bound(smalls.begin(), smalls.end(), fx);
      set.push_back(static_cast<int>(it - smalls.begin()));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    inst.induced.push_back(std::move(set));
  }
  return witness::decide_witness(inst, opts);
}

}  // namespace

RCheckResult check_R(const CompositionSpaceFragment& s, const RamseyDomainFragment& d, int colors,
                     int p_index, const witness::EngineOptions& opts) {
  RCheckResult out;
  for (int f = 0; f < static_cast<int>(d.f_sets.size()); ++f) {
    if (d.set_act[f][p_index] < 0) continue;
    auto r = family_monochromatic(s, d.f_sets[f], d.p_sets[p_index], colors, opts);
    if (r.verdict == witness::Verdict::inconclusive) {
      out.inconclusive = true;
      return out;
    }
    if (r.verdict == witness::Verdict::witness) {
      out.holds = true;
      out.f_index = f;
      return out;
    }
  }
  return out;
}

LPCheckResult check_LP(const CompositionSpaceFragment& s, const RamseyDomainFragment& d, int colors,
                       int p_index, int y_point, const witness::EngineOptions& opts) {
  LPCheckResult out;
  const auto& p = d.p_sets[p_index];
  std::vector<int> fiber;
  for (int x : p)
    if (s.trunc[x] == y_point) fiber.push_back(x);
  if (fiber.empty())
    throw std::invalid_argument("y is not in the truncation image of P");

  for (int f = 0; f < static_cast<int>(d.f_sets.size()); ++f) {
    if (d.set_act[f][p_index] < 0) continue;
    for (int a = 0; a < s.n_a; ++a) {
      if (s.act[a][y_point] < 0) continue;
      std::vector<int> f_a;
      for (int g : d.f_sets[f])
        if (extends(s, g, a)) f_a.push_back(g);
      if (f_a.empty()) continue;
      auto r = family_monochromatic(s, f_a, fiber, colors, opts);
      if (r.verdict == witness::Verdict::inconclusive) {
        out.inconclusive = true;
        return out;
      }
      if (r.verdict == witness::Verdict::witness) {
        out.holds = true;
        out.f_index = f;
        out.a_index = a;
        return out;
      }
    }
  }
  return out;
}

TreeInstance build_tree_instance(int max_nodes) {
  if (max_nodes < 1) throw std::invalid_argument("max_nodes must be >= 1");
  TreeInstance inst;
  inst.max_nodes = max_nodes;
  inst.trees = enumerate_trees(max_nodes);
  const int nt = static_cast<int>(inst.trees.size());

  std::map<std::string, int> tree_index;
  for (int i = 0; i < nt; ++i) tree_index.emplace(inst.trees[i].encode(), i);

  // points: sealed rigid surjections, grouped by (domain, image) in
  // enumeration order, lexicographic by image tuple within a group
  std::map<std::tuple<int, int, std::vector<int>>, int> point_index;
  std::vector<int> dom_of, im_of;
  for (int di = 0; di < nt; ++di)
    for (int ri = 0; ri < nt; ++ri)
      for (auto& f : enumerate_rigid_surjections(inst.trees[di], inst.trees[ri], true)) {
        point_index.emplace(std::make_tuple(di, ri, f.image_of),
                            static_cast<int>(inst.points.size()));
        dom_of.push_back(di);
        im_of.push_back(ri);
        inst.points.push_back(std::move(f));
      }
  const int np = static_cast<int>(inst.points.size());

  auto& space = inst.space;
  space.n_a = space.n_x = np;
  space.n_norms = nt;
  space.norm_leq.assign(nt, std::vector<char>(nt, 0));
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nt; ++j) space.norm_leq[i][j] = norm_leq(inst.trees[i], inst.trees[j]);
  for (int i = 0; i < nt; ++i) space.norm_names.push_back(inst.trees[i].encode());
  for (int i = 0; i < np; ++i) space.a_names.push_back(format_map(inst.points[i]));
  space.x_names = space.a_names;

  space.norm.resize(np);
  for (int i = 0; i < np; ++i) space.norm[i] = dom_of[i];

  space.trunc.resize(np);
  for (int i = 0; i < np; ++i) {
    const TreeMap df = truncate_map_once(inst.points[i]);
    const auto it = point_index.find(
        std::make_tuple(tree_index.at(df.source.encode()), tree_index.at(df.target.encode()), df.image_of));
    if (it == point_index.end()) throw std::logic_error("truncation left the point family");
    space.trunc[i] = it->second;
  }

  // g·f = g applied to f: defined when the domain of f is an initial segment
  // of the image of g; the value composes f after the matching truncation of g.
  space.mult.assign(np, std::vector<int>(np, -1));
  for (int g = 0; g < np; ++g)
    for (int f = 0; f < np; ++f) {
      const OrderedTree& fdom = inst.points[f].source;
      const OrderedTree& gim = inst.points[g].target;
      if (!norm_leq(fdom, gim)) continue;
      const TreeMap gy = truncate_map(inst.points[g], fdom.size() - 1);
      const TreeMap prod = compose(inst.points[f], gy);
      const auto it = point_index.find(
          std::make_tuple(tree_index.at(prod.source.encode()), tree_index.at(prod.target.encode()),
                          prod.image_of));
      if (it == point_index.end()) throw std::logic_error("product left the point family");
      space.mult[g][f] = it->second;
    }
  space.act = space.mult;  // A = X and the two operations coincide

  // Set families: maximal sets K(D, R), closed under truncation and products.
  // A listed set is (ambient domain D, common image R, elements); distinct
  // ambients give distinct entries even when the element sets agree.
  std::map<std::tuple<int, int, std::vector<int>>, int> set_index;
  std::vector<std::tuple<int, int, std::vector<int>>> sets;
  auto add_set = [&](int dom, int im, std::vector<int> elems) -> int {
    auto key = std::make_tuple(dom, im, std::move(elems));
    auto it = set_index.find(key);
    if (it != set_index.end()) return it->second;
    const int id = static_cast<int>(sets.size());
    set_index.emplace(key, id);
    sets.push_back(std::move(key));
    return id;
  };

  for (int di = 0; di < nt; ++di)
    for (int ri = 0; ri < nt; ++ri) {
      std::vector<int> elems;
      for (int x = 0; x < np; ++x)
        if (im_of[x] == ri && space.norm_leq[dom_of[x]][di]) elems.push_back(x);
      if (!elems.empty()) add_set(di, ri, std::move(elems));
    }

  for (size_t head = 0; head < sets.size(); ++head) {
    // truncation image, same ambient
    {
      auto [dom, im, elems] = sets[head];
      std::vector<int> tr;
      for (int x : elems) tr.push_back(space.trunc[x]);
      std::sort(tr.begin(), tr.end());
      tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
      const int rsize = inst.trees[im].size();
      const int tim = rsize == 1
                          ? im
                          : tree_index.at(inst.trees[im].initial_segment(rsize - 2).encode());
      add_set(dom, tim, std::move(tr));
    }
    // products with every composable partner, in both roles
    for (size_t other = 0; other < sets.size(); ++other) {
      for (auto [left, right] : {std::pair{head, other}, std::pair{other, head}}) {
        // copies: add_set may reallocate the list
        const auto [ld, li, lelems] = sets[left];
        const auto [rd, ri, relems] = sets[right];
        if (rd != li) continue;  // d(F2) must equal r(F1)
        std::vector<int> prod;
        for (int a : lelems)
          for (int b : relems) {
            const int ab = space.mult[a][b];
            if (ab < 0) throw std::logic_error("set product must be defined pointwise");
            prod.push_back(ab);
          }
        std::sort(prod.begin(), prod.end());
        prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
        add_set(ld, ri, std::move(prod));
      }
    }
  }

  std::sort(sets.begin(), sets.end());
  const int ns = static_cast<int>(sets.size());

  auto& dom = inst.domain;
  for (const auto& [d_, r_, elems] : sets) {
    inst.set_domain.push_back(d_);
    inst.set_image.push_back(r_);
    dom.f_sets.push_back(elems);
    std::string name =
        "d=" + inst.trees[d_].encode() + " r=" + inst.trees[r_].encode() + " " + set_text(elems, space, true);
    dom.f_names.push_back(std::move(name));
  }
  dom.p_sets = dom.f_sets;
  dom.p_names = dom.f_names;

  auto lookup_set = [&](int d_, int r_, const std::vector<int>& elems) -> int {
    const auto key = std::make_tuple(d_, r_, elems);
    const auto pos = std::lower_bound(sets.begin(), sets.end(), key);
    if (pos == sets.end() || *pos != key) return -1;
    return static_cast<int>(pos - sets.begin());
  };

  dom.set_mult.assign(ns, std::vector<int>(ns, -1));
  dom.set_act.assign(ns, std::vector<int>(ns, -1));
  dom.set_trunc.assign(ns, -1);
  for (int i = 0; i < ns; ++i) {
    const auto& [di_, ri_, ei_] = sets[i];
    for (int j = 0; j < ns; ++j) {
      const auto& [dj_, rj_, ej_] = sets[j];
      if (dj_ != ri_) continue;
      std::vector<int> prod;
      for (int a : ei_)
        for (int b : ej_) prod.push_back(space.mult[a][b]);
      std::sort(prod.begin(), prod.end());
      prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
      const int k = lookup_set(di_, rj_, prod);
      if (k < 0) throw std::logic_error("closure missed a set product");
      dom.set_mult[i][j] = k;
      dom.set_act[i][j] = k;
    }
    std::vector<int> tr;
    for (int x : ei_) tr.push_back(space.trunc[x]);
    std::sort(tr.begin(), tr.end());
    tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
    const int rsize = inst.trees[ri_].size();
    const int tim =
        rsize == 1 ? ri_ : tree_index.at(inst.trees[ri_].initial_segment(rsize - 2).encode());
    const int k = lookup_set(di_, tim, tr);
    if (k < 0) throw std::logic_error("closure missed a truncation image");
    dom.set_trunc[i] = k;
  }

  return inst;
}

ImplicationScan lp_implies_r_scan(const CompositionSpaceFragment& s, const RamseyDomainFragment& d,
                                  int colors, bool parallel) {
  ImplicationScan scan;
  const int np = static_cast<int>(d.p_sets.size());
  scan.rows.resize(np);
  witness::EngineOptions opts;
  opts.parallel = false;  // outer loop owns the threads

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
  for (int p = 0; p < np; ++p) {
    ImplicationScan::PerP row;
    row.p_index = p;
    std::vector<int> fibers;
    for (int x : d.p_sets[p]) fibers.push_back(s.trunc[x]);
    std::sort(fibers.begin(), fibers.end());
    fibers.erase(std::unique(fibers.begin(), fibers.end()), fibers.end());
    row.lp_all_fibers = true;
    for (int y : fibers) {
      auto lp = check_LP(s, d, colors, p, y, opts);
      if (lp.inconclusive) { row.inconclusive = true; break; }
      if (!lp.holds) { row.lp_all_fibers = false; break; }
    }
    if (!row.inconclusive) {
      auto r = check_R(s, d, colors, p, opts);
      row.inconclusive = r.inconclusive;
      row.r_holds = r.holds;
    }
    scan.rows[p] = row;
  }

  std::ostringstream diag;
  for (const auto& row : scan.rows) {
    if (row.inconclusive || !row.lp_all_fibers || row.r_holds) continue;
    scan.violation = true;
    diag << "P=" << d.p_name(row.p_index) << ": pigeonhole holds on every fiber but no family works;";
    int undefined = 0, colorable = 0;
    for (int f = 0; f < static_cast<int>(d.f_sets.size()); ++f)
      d.set_act[f][row.p_index] < 0 ? ++undefined : ++colorable;
    diag << " families with undefined action on P: " << undefined
         << ", families defined but admitting a bad coloring: " << colorable << "\n";
  }
  scan.diagnostics = diag.str();
  return scan;
}

}  // namespace ramsey::framework
