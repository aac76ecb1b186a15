#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "ramsey/partition.hpp"

using namespace ramsey;

TEST_CASE("enumeration counts match Stirling numbers") {
  CHECK(enumerate_partitions(4, 2).size() == 7);
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= m; ++k)
      CHECK((std::int64_t)enumerate_partitions(m, k).size() == oracles::stirling2(m, k));
}

TEST_CASE("discrete and homogeneous cases") {
  const auto discrete = enumerate_partitions(3, 3);
  REQUIRE(discrete.size() == 1);
  CHECK(discrete[0].format() == "1|2|3");

  const auto homog = enumerate_partitions(4, 2, true);
  REQUIRE(homog.size() == 3);
  std::set<std::string> texts;
  for (const auto& p : homog) texts.insert(p.format());
  CHECK(texts == std::set<std::string>{"1,2|3,4", "1,3|2,4", "1,4|2,3"});

  bool warned = false;
  CHECK(enumerate_partitions(5, 2, true, &warned).empty());
  CHECK(warned);
}

TEST_CASE("blocks are ordered by least element and parsing round-trips") {
  const auto p = SetPartition::from_blocks(4, {{2, 4}, {3, 1}});
  CHECK(p.format() == "1,3|2,4");
  CHECK(SetPartition::parse("1,3|2,4") == p);
  CHECK(p.block_of(4) == 1);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_blocks(2, {{1, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::parse("1,|2"), std::invalid_argument);
}

TEST_CASE("subpartition relation") {
  const auto whole = SetPartition::parse("1,2,3,4");
  const auto q = SetPartition::parse("1|2|3,4");
  CHECK(is_subpartition(whole, q));
  CHECK(is_subpartition(q, q));
  CHECK_FALSE(is_subpartition(SetPartition::parse("1,3|2,4"), q));
  CHECK_THROWS_AS(is_subpartition(SetPartition::parse("1|2"), q), std::invalid_argument);
}

TEST_CASE("to_rigid_surjection examples") {
  CHECK(to_rigid_surjection(SetPartition::parse("1,3|2,4")).image_of ==
        std::vector<int>{0, 1, 0, 1});
  CHECK(to_rigid_surjection(SetPartition::parse("1|2|3")) == TreeMap::identity(path_tree(3)));
  CHECK(to_rigid_surjection(SetPartition::parse("1,2,3")).image_of == std::vector<int>{0, 0, 0});
}

TEST_CASE("partition/rigid-surjection bijection on paths") {
  for (int m = 1; m <= 5; ++m)
    for (int k = 1; k <= m; ++k) {
      const auto parts = enumerate_partitions(m, k);
      const auto maps = enumerate_rigid_surjections(path_tree(m), path_tree(k));
      REQUIRE(parts.size() == maps.size());
      std::set<std::vector<int>> from_parts, from_maps;
      for (const auto& p : parts) {
        const auto f = to_rigid_surjection(p);
        CHECK(is_rigid_surjection(f));
        from_parts.insert(f.image_of);
      }
      for (const auto& f : maps) from_maps.insert(f.image_of);
      CHECK(from_parts == from_maps);
    }
}

TEST_CASE("subpartition iff the maps factor through a rigid surjection") {
  for (int m = 1; m <= 5; ++m) {
    for (int k = 1; k <= m; ++k)
      for (int l = k; l <= m; ++l) {
        const auto ps = enumerate_partitions(m, k);
        const auto qs = enumerate_partitions(m, l);
        const auto connectors = enumerate_rigid_surjections(path_tree(l), path_tree(k));
        for (const auto& p : ps)
          for (const auto& q : qs) {
            const auto fp = to_rigid_surjection(p);
            const auto fq = to_rigid_surjection(q);
            bool factors = false;
            for (const auto& r : connectors)
              if (compose(r, fq) == fp) { factors = true; break; }
            CHECK(is_subpartition(p, q) == factors);
          }
      }
  }
}

TEST_CASE("homogeneity is not preserved by coarsening or refinement") {
  CHECK(SetPartition::parse("1,2|3,4").is_homogeneous());
  CHECK(SetPartition::parse("1,2,3,4").is_homogeneous());        // this coarsening stays homogeneous
  CHECK_FALSE(SetPartition::parse("1,2|3|4").is_homogeneous());  // this refinement does not
  // and a coarsening that breaks it
  CHECK(SetPartition::parse("1,2|3,4|5,6").is_homogeneous());
  CHECK_FALSE(SetPartition::parse("1,2,3,4|5,6").is_homogeneous());
}
