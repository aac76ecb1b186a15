#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/partition.hpp"
#include "ramsey/tree.hpp"
#include "ramsey/tree_map.hpp"

namespace ramsey::witness {

/// Abstract coloring instance: small objects get colored; a placement is a
/// candidate monochromatic site, identified with the set of small indices it
/// induces.  The instance is a witness when every coloring with the given
/// number of colors leaves some placement's induced set monochromatic.
struct ColoringInstance {
  int colors = 1;
  int n_smalls = 0;
  std::vector<std::vector<int>> induced;  // per placement, sorted small indices
  std::vector<std::string> small_labels;      // optional, for output
  std::vector<std::string> placement_labels;  // optional, for output

  int n_placements() const { return static_cast<int>(induced.size()); }
  /// Throws unless every induced set is non-empty, sorted, in range, and
  /// smalls are non-empty whenever placements are.
  void validate() const;
};

enum class Verdict { witness, not_witness, inconclusive };

std::string to_string(Verdict v);

struct WitnessResult {
  Verdict verdict = Verdict::inconclusive;
  std::vector<int> bad_coloring;  // one color per small; set iff not_witness
  long long nodes = 0;            // search-tree nodes visited
  double wall_seconds = 0;        // stat only; never serialized
};

struct EngineOptions {
  long long node_budget = 10'000'000;  // per subproblem
  bool parallel = true;
  int split_target = 256;  // subproblem count the splitter aims for
};

/// Decision engine.  The DFS branches on the small object occurring in the
/// most live placements (ties to the smallest index), kills a placement as
/// soon as its induced set carries two colors, prunes when a placement is
/// fully assigned monochromatic, and canonicalizes colors (a new color may
/// only be the smallest unused one).  The top of the tree is expanded into a
/// deterministic list of subproblems; every subproblem runs to completion
/// (or to its node budget), so the verdict, the reported bad coloring
/// (lexicographically least among the subproblem results) and the node
/// count do not depend on scheduling or worker count.
WitnessResult decide_witness(const ColoringInstance& inst, const EngineOptions& opts = {});

/// Plain depth-first reference: same semantics, no splitting.
WitnessResult decide_witness_reference(const ColoringInstance& inst,
                                       long long node_budget = 10'000'000);

/// Enumerates all colors^n_smalls colorings outright (lexicographic order);
/// returns inconclusive when that count exceeds coloring_cap.
WitnessResult naive_oracle(const ColoringInstance& inst, long long coloring_cap = 4096);

/// Independent re-check: true iff the coloring leaves every placement
/// polychromatic (i.e. is a valid bad coloring).
bool recheck_bad_coloring(const ColoringInstance& inst, const std::vector<int>& coloring);

enum class InstanceKind { dual_tree, leeb, gr, gr_homogeneous };

std::optional<InstanceKind> instance_kind_from_string(std::string_view name);
std::string to_string(InstanceKind k);

/// Dual statement for trees: smalls are the rigid surjections U -> S,
/// placements the rigid surjections g0: U -> T, and g0 induces the
/// compositions {f∘g0 : f a rigid surjection T -> S}.  sealed_only restricts
/// all three families to sealed maps.
ColoringInstance build_dual_tree_instance(const OrderedTree& s, const OrderedTree& t,
                                          const OrderedTree& u, int colors,
                                          bool sealed_only = false);

/// Embedding statement: smalls are copies of S in U, placements copies of T
/// in U, and a copy T' induces the copies of S inside T'.
ColoringInstance build_leeb_instance(const OrderedTree& s, const OrderedTree& t,
                                     const OrderedTree& u, int colors);

/// Partition statement: smalls are k-partitions of [m], placements the
/// l-partitions, and Q induces its k-subpartitions.  The homogeneous variant
/// keeps only the partitions with all blocks of equal size.
ColoringInstance build_gr_instance(int k, int l, int m, int colors, bool homogeneous = false);

struct MinWitnessCandidate {
  std::string label;  // tree encoding or ground-set size
  WitnessResult result;
};

struct MinWitnessResult {
  bool found = false;
  bool inconclusive = false;
  std::string witness_label;
  std::vector<MinWitnessCandidate> candidates;  // in the order tried
};

/// Scan candidate trees U (with up to max_size nodes, enumeration order) for
/// the tree statements.  Degenerate candidates without placements are
/// recorded as not_witness.
MinWitnessResult search_min_witness_trees(InstanceKind kind, const OrderedTree& s,
                                          const OrderedTree& t, int colors, int max_size,
                                          bool sealed_only = false,
                                          const EngineOptions& opts = {});

/// Scan ground sizes m = l..max_size for the partition statements.
MinWitnessResult search_min_witness_gr(int k, int l, int colors, int max_size,
                                       bool homogeneous = false, const EngineOptions& opts = {});

}  // namespace ramsey::witness
