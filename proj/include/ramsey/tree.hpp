#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

/// Finite rooted tree with ordered children, stored in canonical form:
/// nodes are indexed 0..n-1 in depth-first preorder (node 0 is the root),
/// every node's parent has a smaller index, and the child order of each
/// node coincides with index order.  Two trees are equal iff their parent
/// arrays (equivalently, their parenthesis encodings) are equal.
///
/// The lexicographic linear order on nodes coincides with preorder index
/// order; lex_compare_casewise evaluates the case-based definition directly
/// and is kept as the validation route.
class OrderedTree {
public:
  OrderedTree();  // single node

  /// Parse a balanced-parenthesis encoding ("(()())" etc).
  /// Throws std::invalid_argument naming the offending position.
  static OrderedTree decode(std::string_view s);

  /// Build from a parent array (parent of root = -1).  The array must
  /// already be in canonical preorder form; throws otherwise.
  static OrderedTree from_parents(std::vector<int> parents);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { check_node(v); return parent_[v]; }
  const std::vector<int>& children(int v) const { check_node(v); return children_[v]; }
  int depth(int v) const { check_node(v); return depth_[v]; }
  bool is_leaf(int v) const { check_node(v); return children_[v].empty(); }
  int leaf_count() const;
  std::vector<int> leaves() const;  // in preorder (= lexicographic) order

  /// Every node has 0 or 2 immediate successors.
  bool is_binary() const;

  std::string encode() const;

  /// u is a predecessor of v (every node is its own predecessor).
  bool is_ancestor(int u, int v) const;

  /// Deepest common predecessor of v and w.
  int meet(int v, int w) const;

  /// Lexicographic order on nodes; equals preorder index comparison.
  std::strong_ordering lex_compare(int v, int w) const {
    check_node(v); check_node(w);
    return v <=> w;
  }

  /// The case-based definition: predecessors come first; otherwise the
  /// branches out of the meet are compared in child order.
  std::strong_ordering lex_compare_casewise(int v, int w) const;

  /// Induced tree on the preorder prefix {0..w}; stays canonical.
  OrderedTree initial_segment(int w) const;

  bool operator==(const OrderedTree& o) const { return parent_ == o.parent_; }

private:
  explicit OrderedTree(std::vector<int> parents);  // trusted, no validation
  void build_derived();
  void check_node(int v) const;

  std::vector<int> parent_;                 // parent_[0] == -1
  std::vector<std::vector<int>> children_;  // ascending indices
  std::vector<int> depth_;
};

/// Enumeration order used everywhere: node count ascending, then encoding.
bool tree_less(const OrderedTree& a, const OrderedTree& b);

/// All canonical ordered trees with 1..max_nodes nodes, each isomorphism
/// class exactly once, sorted by (node count, encoding).  With binary_leaves
/// set, only binary trees with that many leaves are kept.
std::vector<OrderedTree> enumerate_trees(int max_nodes,
                                         std::optional<int> binary_leaves = std::nullopt);

/// Binary trees with the given number of leaves (they have 2*leaves-1 nodes).
std::vector<OrderedTree> binary_trees(int leaves);

/// Path tree with m nodes (each node's only child is the next index).
OrderedTree path_tree(int m);

/// Order on the tree family: a <= b iff a is (isomorphic to) an initial
/// segment of b.  Initial segments are determined by size, so this is a
/// single prefix comparison.
bool norm_leq(const OrderedTree& a, const OrderedTree& b);

}  // namespace ramsey
