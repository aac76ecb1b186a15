#pragma once

#include <string>
#include <vector>

#include "ramsey/tree.hpp"
#include "ramsey/tree_map.hpp"
#include "ramsey/witness.hpp"

namespace ramsey::framework {

/// Partial operation table: table[i][j] is a result index, or -1 when the
/// operation is undefined on that pair.  Definedness is stored, never
/// inferred.
using Table = std::vector<std::vector<int>>;

/// Explicit finite fragment of a normed composition space: point sets A and
/// X, a partial multiplication on A, a partial action of A on X, a total
/// truncation and a total norm on X, and a partial order on norm values.
struct CompositionSpaceFragment {
  int n_a = 0;
  int n_x = 0;
  Table mult;              // n_a x n_a
  Table act;               // n_a x n_x
  std::vector<int> trunc;  // n_x, total
  std::vector<int> norm;   // n_x -> norm id
  int n_norms = 0;
  std::vector<std::vector<char>> norm_leq;  // n_norms x n_norms

  std::vector<std::string> a_names, x_names, norm_names;

  std::string a_name(int a) const;
  std::string x_name(int x) const;
};

/// b extends a: wherever the action of a is defined, the action of b is
/// defined and agrees.  Computed by scanning all of X.
bool extends(const CompositionSpaceFragment& s, int b, int a);

/// Families of non-empty subsets of A and X with partial set-level
/// operations.  set_trunc records which listed set is the elementwise
/// truncation of each P (so that membership of ∂P in the family is data,
/// like every other definedness fact).
struct RamseyDomainFragment {
  std::vector<std::vector<int>> f_sets;  // sorted A indices
  std::vector<std::vector<int>> p_sets;  // sorted X indices
  Table set_mult;               // F x F
  Table set_act;                // F x P
  std::vector<int> set_trunc;   // per P, index of ∂P (or -1)

  std::vector<std::string> f_names, p_names;

  std::string f_name(int f) const;
  std::string p_name(int p) const;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string witness;  // failure description, empty on pass
};

struct AxiomReport {
  std::vector<AxiomCheck> items;
  bool all_pass() const;
  const AxiomCheck& item(const std::string& axiom) const;
};

/// Space-level checks: the action law and axioms (i) truncation commutes
/// with the action, (ii) truncation does not increase the norm,
/// (iii) the action is defined downward along the norm and is monotone.
AxiomReport check_space_axioms(const CompositionSpaceFragment& s);

/// Set-level checks: pointwise laws for both set operations, axioms
/// (a) associativity of definedness, (b) closure under truncation,
/// (c) extension, plus the vanishing and linear conditions.
AxiomReport check_domain_axioms(const CompositionSpaceFragment& s, const RamseyDomainFragment& d);

struct RCheckResult {
  bool holds = false;
  bool inconclusive = false;
  int f_index = -1;
};

/// Ramsey condition for one P: the first F (fragment order) whose action on
/// P is defined and for which every coloring admits a monochromatic f.
RCheckResult check_R(const CompositionSpaceFragment& s, const RamseyDomainFragment& d, int colors,
                     int p_index, const witness::EngineOptions& opts = {});

struct LPCheckResult {
  bool holds = false;
  bool inconclusive = false;
  int f_index = -1;
  int a_index = -1;
};

/// Local pigeonhole condition for one fiber P_y = {x in P : ∂x = y}:
/// the first (F, a) with the action of F on P defined, the action of a on y
/// defined, and every coloring of F_a acting on P_y admitting a
/// monochromatic f in F_a.  Throws when y is not in ∂P.
LPCheckResult check_LP(const CompositionSpaceFragment& s, const RamseyDomainFragment& d, int colors,
                       int p_index, int y_point, const witness::EngineOptions& opts = {});

/// The concrete fragment built from sealed rigid surjections between
/// canonical trees of bounded size.  Point g multiplies with / acts on f
/// exactly when the domain of f is an initial segment of the image of g;
/// the value is f composed with that truncation of g.  Norm = domain tree.
/// The set families are generated from the maximal sets K(D, R) (all points
/// with image R and domain an initial segment of D) and closed under
/// truncation and products; each listed set keeps its ambient domain tree D
/// so that set-level definedness follows the d(P) = r(F) matching rule.
struct TreeInstance {
  int max_nodes = 0;
  std::vector<OrderedTree> trees;  // norm id -> tree, enumeration order
  std::vector<TreeMap> points;     // element id -> sealed rigid surjection
  std::vector<int> set_domain;     // per set: ambient tree (norm id)
  std::vector<int> set_image;      // per set: common image tree (norm id)
  CompositionSpaceFragment space;
  RamseyDomainFragment domain;
};

TreeInstance build_tree_instance(int max_nodes);

/// Scan of the abstract Ramsey implication on a fragment: for every P whose
/// fibers all satisfy the pigeonhole condition, the Ramsey condition must
/// hold.  A violation carries diagnostics separating definedness gaps from
/// genuine coloring failures.
struct ImplicationScan {
  struct PerP {
    int p_index = -1;
    bool lp_all_fibers = false;
    bool r_holds = false;
    bool inconclusive = false;
  };
  std::vector<PerP> rows;
  bool violation = false;
  std::string diagnostics;
};

ImplicationScan lp_implies_r_scan(const CompositionSpaceFragment& s, const RamseyDomainFragment& d,
                                  int colors, bool parallel = true);

}  // namespace ramsey::framework
