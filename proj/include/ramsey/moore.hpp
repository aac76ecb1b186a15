#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "ramsey/tree.hpp"

namespace ramsey::moore {

/// Exact arithmetic throughout this module; no floating point.
using Rat = boost::multiprecision::cpp_rational;

/// Tuple of binary trees to be attached at the leaves of a binary tree.
struct GraftTuple {
  std::vector<OrderedTree> parts;
  int total_leaves = 0;
};

/// Attach parts[i] at the i-th leaf of t (leaves in lexicographic order);
/// the root of parts[i] is identified with that leaf.  Throws on arity
/// mismatch or non-binary input.
OrderedTree graft(const OrderedTree& t, const std::vector<OrderedTree>& parts);

/// All m-tuples of binary trees with total_leaves n, ordered
/// lexicographically by (leaf-count composition, part encodings).
std::vector<GraftTuple> graft_tuples(int m, int n);

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rat> alpha;  // one weight per graft tuple, when feasible
  std::string reason;      // set when trivially infeasible
};

/// Decide whether non-negative weights alpha over the graft tuples, summing
/// to one, make the weighted coloring sum constant over the m-leaf binary
/// trees.  coloring has one {0,1} entry per tree of binary_trees(n), in
/// enumeration order.  Phase-one simplex with Bland's rule.
FeasibilityResult feasibility(const std::vector<int>& coloring, int m, int n);

/// Exact re-check of a returned weight vector: non-negative, sums to one,
/// and the weighted sums agree across all m-leaf binary trees.
bool revalidate_alpha(const std::vector<int>& coloring, int m, int n, const std::vector<Rat>& alpha);

struct MooreCheckResult {
  bool holds = false;
  bool inconclusive = false;
  long long colorings_checked = 0;
  unsigned long long counterexample = 0;  // least failing coloring integer
  std::string counterexample_bits;        // character i = color of tree i
  std::vector<Rat> sample_alpha;          // weights for coloring 0, when holds
};

/// Sweep all 2-colorings of the n-leaf binary trees (as integers ascending,
/// complements skipped); holds iff every coloring is feasible.
MooreCheckResult moore_check(int m, int n, long long coloring_cap = 1 << 20, bool parallel = true);

}  // namespace ramsey::moore
