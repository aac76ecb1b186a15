#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/tree.hpp"

namespace ramsey {

/// Total function between the node sets of two ordered trees.
struct TreeMap {
  OrderedTree source;
  OrderedTree target;
  std::vector<int> image_of;  // one target index per source node

  TreeMap(OrderedTree src, OrderedTree tgt, std::vector<int> img);
  static TreeMap identity(const OrderedTree& t);

  int operator()(int v) const { return image_of[v]; }
  bool operator==(const TreeMap& o) const = default;
};

/// f paired with its adjoint e: e is a morphism, e∘f lies below the
/// identity pointwise and f∘e is the identity.
struct GaloisPair {
  TreeMap f;  // T -> S
  TreeMap e;  // S -> T
};

/// Meet-preserving, order-monotone, root-to-root.
bool is_morphism(const TreeMap& e);

/// Injective morphism.
bool is_embedding(const TreeMap& e);

/// All embeddings of s into t, ordered lexicographically by image tuple.
std::vector<TreeMap> enumerate_embeddings(const OrderedTree& s, const OrderedTree& t);

/// Both clauses of the perfect-connection law, pointwise:
/// e(f(w)) below w for all w, and f(e(v)) == v for all v.
bool galois_verify(const GaloisPair& p);

/// The unique adjoint pair for f if f is a rigid surjection, else nullopt.
/// The only candidate for e(v) is the least element of the fiber over v.
std::optional<GaloisPair> rigid_adjoint(const TreeMap& f);

bool is_rigid_surjection(const TreeMap& f);

/// The fiber over the largest target node is exactly the largest source node.
bool is_sealed(const TreeMap& f);

/// All rigid surjections t -> s, ordered lexicographically by image tuple.
/// Enumeration assigns images in preorder and prunes on the running adjoint
/// candidate; enumerate_rigid_surjections_naive scans all |s|^|t| maps and
/// is kept as the oracle.
std::vector<TreeMap> enumerate_rigid_surjections(const OrderedTree& t, const OrderedTree& s,
                                                 bool sealed_only = false);
std::vector<TreeMap> enumerate_rigid_surjections_naive(const OrderedTree& t, const OrderedTree& s,
                                                       bool sealed_only = false);

/// Restriction of a rigid surjection to the initial segment below e(v),
/// with target the initial segment below v.  Throws if f is not rigid.
TreeMap truncate_map(const TreeMap& f, int v);

/// Image-shrinking truncation: identity on maps with a one-node image,
/// otherwise the restriction at the second largest image vertex.
TreeMap truncate_map_once(const TreeMap& f);

/// outer ∘ inner (inner.target must equal outer.source).
TreeMap compose(const TreeMap& outer, const TreeMap& inner);

/// "source -> target : i0,i1,..." with the bit-exact tree encodings.
std::string format_map(const TreeMap& m);
TreeMap parse_map(std::string_view text);

}  // namespace ramsey
