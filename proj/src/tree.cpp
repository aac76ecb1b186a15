#include "ramsey/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ramsey {

OrderedTree::OrderedTree() : parent_{-1} { build_derived(); }

OrderedTree::OrderedTree(std::vector<int> parents) : parent_(std::move(parents)) {
  build_derived();
}

void OrderedTree::build_derived() {
  const int n = size();
  children_.assign(n, {});
  depth_.assign(n, 0);
  for (int v = 1; v < n; ++v) {
    children_[parent_[v]].push_back(v);
    depth_[v] = depth_[parent_[v]] + 1;
  }
}

void OrderedTree::check_node(int v) const {
  if (v < 0 || v >= size())
    throw std::out_of_range("node index " + std::to_string(v) + " out of range for tree of size " +
                            std::to_string(size()));
}

OrderedTree OrderedTree::decode(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("tree parse error: empty input");
  std::vector<int> parents;
  std::vector<int> stack;
  for (size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') {
      if (stack.empty() && !parents.empty())
        throw std::invalid_argument("tree parse error: second root at position " + std::to_string(i));
      parents.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(parents.size()) - 1);
    } else if (c == ')') {
      if (stack.empty())
        throw std::invalid_argument("tree parse error: unbalanced ')' at position " + std::to_string(i));
      stack.pop_back();
      if (stack.empty() && i + 1 < s.size())
        throw std::invalid_argument("tree parse error: trailing input at position " + std::to_string(i + 1));
    } else {
      throw std::invalid_argument("tree parse error: unexpected character at position " + std::to_string(i));
    }
  }
  if (!stack.empty())
    throw std::invalid_argument("tree parse error: unclosed '(' at position " + std::to_string(s.size()));
  return OrderedTree(std::move(parents));
}

OrderedTree OrderedTree::from_parents(std::vector<int> parents) {
  const int n = static_cast<int>(parents.size());
  if (n < 1) throw std::invalid_argument("tree must be non-empty");
  if (parents[0] != -1) throw std::invalid_argument("node 0 must be the root");
  for (int v = 1; v < n; ++v)
    if (parents[v] < 0 || parents[v] >= v)
      throw std::invalid_argument("parent of node " + std::to_string(v) + " must be a smaller index");
  OrderedTree t(std::move(parents));
  // Preorder with children in index order must visit 0,1,...,n-1.
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& ch = t.children_[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  for (int i = 0; i < n; ++i)
    if (order[i] != i)
      throw std::invalid_argument("parent array is not in preorder canonical form");
  return t;
}

int OrderedTree::leaf_count() const {
  int c = 0;
  for (int v = 0; v < size(); ++v)
    if (children_[v].empty()) ++c;
  return c;
}

std::vector<int> OrderedTree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (children_[v].empty()) out.push_back(v);
  return out;
}

bool OrderedTree::is_binary() const {
  for (int v = 0; v < size(); ++v) {
    const size_t k = children_[v].size();
    if (k != 0 && k != 2) return false;
  }
  return true;
}

std::string OrderedTree::encode() const {
  std::string out;
  out.reserve(2 * size());
  // iterative preorder emit: '(' on entry, ')' after the subtree
  std::vector<std::pair<int, size_t>> stack;  // (node, next child position)
  stack.emplace_back(0, 0);
  out.push_back('(');
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    if (pos < children_[v].size()) {
      int c = children_[v][pos++];
      out.push_back('(');
      stack.emplace_back(c, 0);
    } else {
      out.push_back(')');
      stack.pop_back();
    }
  }
  return out;
}

bool OrderedTree::is_ancestor(int u, int v) const {
  check_node(u);
  check_node(v);
  while (v > u) v = parent_[v];
  return v == u;
}

int OrderedTree::meet(int v, int w) const {
  check_node(v);
  check_node(w);
  while (v != w) {
    if (depth_[v] >= depth_[w]) v = parent_[v];
    else w = parent_[w];
  }
  return v;
}

std::strong_ordering OrderedTree::lex_compare_casewise(int v, int w) const {
  check_node(v);
  check_node(w);
  if (v == w) return std::strong_ordering::equal;
  if (is_ancestor(v, w)) return std::strong_ordering::less;
  if (is_ancestor(w, v)) return std::strong_ordering::greater;
  const int m = meet(v, w);
  // predecessor of v (resp. w) among the immediate successors of the meet
  int cv = v, cw = w;
  while (parent_[cv] != m) cv = parent_[cv];
  while (parent_[cw] != m) cw = parent_[cw];
  const auto& ch = children_[m];
  const auto pv = std::find(ch.begin(), ch.end(), cv) - ch.begin();
  const auto pw = std::find(ch.begin(), ch.end(), cw) - ch.begin();
  return pv <=> pw;
}

OrderedTree OrderedTree::initial_segment(int w) const {
  check_node(w);
  // a preorder prefix is parent-closed and keeps its numbering
  return OrderedTree(std::vector<int>(parent_.begin(), parent_.begin() + w + 1));
}

bool tree_less(const OrderedTree& a, const OrderedTree& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.encode() < b.encode();
}

namespace {

// Encodings of all trees / forests with exactly the given node count.
// Generation splits off the first subtree; each forest arises exactly once.
const std::vector<std::string>& tree_strings(int n);

const std::vector<std::string>& forest_strings(int n) {
  static std::vector<std::vector<std::string>> memo{{""}};
  if (n < static_cast<int>(memo.size())) return memo[n];
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    std::vector<std::string> out;
    for (int k = 1; k <= m; ++k)
      for (const auto& head : tree_strings(k))
        for (const auto& rest : memo[m - k]) out.push_back(head + rest);
    memo.push_back(std::move(out));
  }
  return memo[n];
}

const std::vector<std::string>& tree_strings(int n) {
  static std::vector<std::vector<std::string>> memo{{}};  // no tree with 0 nodes
  if (n < static_cast<int>(memo.size())) return memo[n];
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    std::vector<std::string> out;
    for (const auto& f : forest_strings(m - 1)) out.push_back("(" + f + ")");
    std::sort(out.begin(), out.end());
    memo.push_back(std::move(out));
  }
  return memo[n];
}

}  // namespace

std::vector<OrderedTree> enumerate_trees(int max_nodes, std::optional<int> binary_leaves) {
  if (max_nodes < 1) throw std::invalid_argument("max_nodes must be >= 1");
  std::vector<OrderedTree> out;
  for (int n = 1; n <= max_nodes; ++n) {
    for (const auto& s : tree_strings(n)) {
      OrderedTree t = OrderedTree::decode(s);
      if (binary_leaves) {
        if (!t.is_binary() || t.leaf_count() != *binary_leaves) continue;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<OrderedTree> binary_trees(int leaves) {
  if (leaves < 1) throw std::invalid_argument("leaf count must be >= 1");
  return enumerate_trees(2 * leaves - 1, leaves);
}

OrderedTree path_tree(int m) {
  if (m < 1) throw std::invalid_argument("path length must be >= 1");
  std::vector<int> parents(m);
  for (int v = 0; v < m; ++v) parents[v] = v - 1;
  return OrderedTree::from_parents(std::move(parents));
}

bool norm_leq(const OrderedTree& a, const OrderedTree& b) {
  if (a.size() > b.size()) return false;
  if (a.size() == b.size()) return a == b;
  return b.initial_segment(a.size() - 1) == a;
}

}  // namespace ramsey
