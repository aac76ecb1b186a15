#include "ramsey/moore.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ramsey::moore {

OrderedTree graft(const OrderedTree& t, const std::vector<OrderedTree>& parts) {
  if (!t.is_binary()) throw std::invalid_argument("graft base must be binary");
  const auto leaves = t.leaves();
  if (leaves.size() != parts.size())
    throw std::invalid_argument("graft needs one part per leaf (" + std::to_string(leaves.size()) +
                                " leaves, " + std::to_string(parts.size()) + " parts)");
  for (const auto& u : parts)
    if (!u.is_binary()) throw std::invalid_argument("graft parts must be binary");
  // Leaves appear in the encoding as "()" substrings, in lexicographic
  // order; replacing the i-th occurrence splices the i-th part's root onto
  // that leaf.
  const std::string base = t.encode();
  std::string out;
  size_t next_leaf = 0;
  for (size_t i = 0; i < base.size(); ++i) {
    if (base[i] == '(' && i + 1 < base.size() && base[i + 1] == ')') {
      out += parts[next_leaf++].encode();
      ++i;
    } else {
      out.push_back(base[i]);
    }
  }
  return OrderedTree::decode(out);
}

std::vector<GraftTuple> graft_tuples(int m, int n) {
  std::vector<GraftTuple> out;
  if (m < 1 || n < m) return out;
  // cache binary trees by leaf count
  std::vector<std::vector<OrderedTree>> by_leaves(n + 1);
  for (int k = 1; k <= n; ++k) by_leaves[k] = binary_trees(k);

  std::vector<int> comp(m);
  std::vector<OrderedTree> parts;
  auto fill_parts = [&](auto&& self, int i) -> void {
    if (i == m) {
      out.push_back(GraftTuple{parts, n});
      return;
    }
    for (const auto& u : by_leaves[comp[i]]) {
      parts.push_back(u);
      self(self, i + 1);
      parts.pop_back();
    }
  };
  auto compositions = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      comp[i] = left;
      fill_parts(fill_parts, 0);
      return;
    }
    for (int k = 1; k <= left - (m - 1 - i); ++k) {
      comp[i] = k;
      self(self, i + 1, left - k);
    }
  };
  compositions(compositions, 0, n);
  return out;
}

namespace {

// Phase-one simplex on {Ax = b, x >= 0} with exact rationals and Bland's
// rule.  Returns the basic values of the real variables when feasible.
bool simplex_feasible(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat>* solution) {
  const int rows = static_cast<int>(a.size());
  const int reals = rows == 0 ? 0 : static_cast<int>(a[0].size());
  if (rows == 0) {
    if (solution) solution->assign(reals, Rat(0));
    return true;
  }
  for (int r = 0; r < rows; ++r)
    if (b[r] < 0) {
      b[r] = -b[r];
      for (auto& v : a[r]) v = -v;
    }
  const int cols = reals + rows;  // artificial variable per row
  // tableau rows: [A | I | b]; objective row minimizes the artificial sum
  std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < reals; ++c) tab[r][c] = a[r][c];
    tab[r][reals + r] = 1;
    tab[r][cols] = b[r];
  }
  std::vector<Rat> obj(cols + 1, Rat(0));  // reduced costs, artificial basis
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c <= cols; ++c) obj[c] -= tab[r][c];
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = reals + r;

  while (true) {
    int enter = -1;
    for (int c = 0; c < cols; ++c)
      if (obj[c] < 0) { enter = c; break; }  // Bland: least index
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio(0);
    for (int r = 0; r < rows; ++r) {
      if (tab[r][enter] <= 0) continue;
      const Rat ratio = tab[r][cols] / tab[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-one objective is bounded; no ratio row found");
    const Rat pivot = tab[leave][enter];
    for (int c = 0; c <= cols; ++c) tab[leave][c] /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      const Rat factor = tab[r][enter];
      for (int c = 0; c <= cols; ++c) tab[r][c] -= factor * tab[leave][c];
    }
    if (obj[enter] != 0) {
      const Rat factor = obj[enter];
      for (int c = 0; c <= cols; ++c) obj[c] -= factor * tab[leave][c];
    }
    basis[leave] = enter;
  }

  Rat artificial_sum(0);
  for (int r = 0; r < rows; ++r)
    if (basis[r] >= reals) artificial_sum += tab[r][cols];
  if (artificial_sum != 0) return false;
  if (solution) {
    solution->assign(reals, Rat(0));
    for (int r = 0; r < rows; ++r)
      if (basis[r] < reals) (*solution)[basis[r]] = tab[r][cols];
  }
  return true;
}

}  // namespace

namespace {

// which n-leaf tree each (m-leaf tree, tuple) pair grafts to
std::vector<std::vector<int>> graft_index_matrix(int m, int n) {
  const auto tm = binary_trees(m);
  const auto tn = binary_trees(n);
  const auto tuples = graft_tuples(m, n);
  std::map<std::string, int> tn_index;
  for (size_t i = 0; i < tn.size(); ++i) tn_index.emplace(tn[i].encode(), static_cast<int>(i));
  std::vector<std::vector<int>> matrix(tm.size(), std::vector<int>(tuples.size()));
  for (size_t ti = 0; ti < tm.size(); ++ti)
    for (size_t j = 0; j < tuples.size(); ++j)
      matrix[ti][j] = tn_index.at(graft(tm[ti], tuples[j].parts).encode());
  return matrix;
}

FeasibilityResult feasibility_on_matrix(const std::vector<int>& coloring,
                                        const std::vector<std::vector<int>>& matrix) {
  FeasibilityResult out;
  if (matrix.empty() || matrix[0].empty()) {
    out.reason = "no graft tuples: need n >= m";
    return out;
  }
  // rows: weighted color sum constant across the m-leaf trees, weights sum to 1
  const int nv = static_cast<int>(matrix[0].size());
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (size_t ti = 1; ti < matrix.size(); ++ti) {
    std::vector<Rat> row(nv);
    for (int j = 0; j < nv; ++j) row[j] = coloring[matrix[ti][j]] - coloring[matrix[0][j]];
    a.push_back(std::move(row));
    b.push_back(Rat(0));
  }
  a.push_back(std::vector<Rat>(nv, Rat(1)));
  b.push_back(Rat(1));

  std::vector<Rat> solution;
  out.feasible = simplex_feasible(std::move(a), std::move(b), &solution);
  if (out.feasible) out.alpha = std::move(solution);
  return out;
}

}  // namespace

FeasibilityResult feasibility(const std::vector<int>& coloring, int m, int n) {
  if (static_cast<int>(coloring.size()) != static_cast<int>(binary_trees(n).size()))
    throw std::invalid_argument("coloring must cover every n-leaf binary tree");
  return feasibility_on_matrix(coloring, graft_index_matrix(m, n));
}

bool revalidate_alpha(const std::vector<int>& coloring, int m, int n, const std::vector<Rat>& alpha) {
  const auto tm = binary_trees(m);
  const auto tn = binary_trees(n);
  const auto tuples = graft_tuples(m, n);
  if (alpha.size() != tuples.size()) return false;
  Rat total(0);
  for (const auto& v : alpha) {
    if (v < 0) return false;
    total += v;
  }
  if (total != 1) return false;
  std::map<std::string, int> tn_index;
  for (size_t i = 0; i < tn.size(); ++i) tn_index.emplace(tn[i].encode(), static_cast<int>(i));
  Rat first(0);
  for (size_t ti = 0; ti < tm.size(); ++ti) {
    Rat sum(0);
    for (size_t j = 0; j < tuples.size(); ++j)
      sum += alpha[j] * coloring[tn_index.at(graft(tm[ti], tuples[j].parts).encode())];
    if (ti == 0) first = sum;
    else if (sum != first) return false;
  }
  return true;
}

MooreCheckResult moore_check(int m, int n, long long coloring_cap, bool parallel) {
  if (n < m) throw std::invalid_argument("need n >= m");
  MooreCheckResult out;
  const int k = static_cast<int>(binary_trees(n).size());
  if (k >= 62 || (1LL << k) > coloring_cap) {
    out.inconclusive = true;
    return out;
  }
  const unsigned long long total = 1ULL << k;
  const unsigned long long full_mask = total - 1;
  const auto matrix = graft_index_matrix(m, n);

  unsigned long long least_fail = ~0ULL;
  long long checked = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel) \
    reduction(min : least_fail) reduction(+ : checked)
#endif
  for (long long mask = 0; mask < static_cast<long long>(total); ++mask) {
    const unsigned long long complement = full_mask & ~static_cast<unsigned long long>(mask);
    if (complement < static_cast<unsigned long long>(mask)) continue;  // color swap preserves feasibility
    std::vector<int> coloring(k);
    for (int i = 0; i < k; ++i) coloring[i] = (mask >> i) & 1;
    ++checked;
    if (!feasibility_on_matrix(coloring, matrix).feasible)
      least_fail = std::min(least_fail, static_cast<unsigned long long>(mask));
  }

  out.colorings_checked = checked;
  if (least_fail != ~0ULL) {
    out.counterexample = least_fail;
    out.counterexample_bits.resize(k);
    for (int i = 0; i < k; ++i) out.counterexample_bits[i] = ((least_fail >> i) & 1) ? '1' : '0';
  } else {
    out.holds = true;
    out.sample_alpha = feasibility_on_matrix(std::vector<int>(k, 0), matrix).alpha;
  }
  return out;
}

}  // namespace ramsey::moore
