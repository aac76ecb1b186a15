#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ramsey/tree_map.hpp"

namespace ramsey {

/// Partition of [m] = {1..m} into non-empty blocks, listed by least element.
struct SetPartition {
  int ground = 0;                        // m
  std::vector<std::vector<int>> blocks;  // each sorted; min(block i) < min(block i+1)

  static SetPartition from_blocks(int m, std::vector<std::vector<int>> blocks);
  /// Parse the bit-exact text format "1,3|2,4".
  static SetPartition parse(std::string_view text);
  std::string format() const;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_of(int x) const;  // 0-based block index of element x in [m]
  bool is_homogeneous() const;

  bool operator==(const SetPartition& o) const = default;
};

/// All k-partitions of [m], ordered lexicographically by the sequence
/// (block index of 1, ..., block index of m).  With homogeneous set, only
/// partitions whose blocks all have m/k elements are produced; if k does not
/// divide m the stream is empty and *divisibility_warning is set.
std::vector<SetPartition> enumerate_partitions(int m, int k, bool homogeneous = false,
                                               bool* divisibility_warning = nullptr);

/// Every block of p is a union of blocks of q.  Throws on ground mismatch.
bool is_subpartition(const SetPartition& p, const SetPartition& q);

/// The map [m] -> [k] on path trees sending x to its block index.
TreeMap to_rigid_surjection(const SetPartition& p);

}  // namespace ramsey
