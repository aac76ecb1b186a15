#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "ramsey/fullsets.hpp"

using namespace ramsey::fullsets;

namespace {

std::vector<char> members_of(const std::vector<std::string>& texts, int n, int l, int p) {
  const auto space = enumerate_space(n, l, p);
  std::vector<char> member(space.size(), 0);
  for (const auto& text : texts) {
    const auto target = parse_pv(text, p);
    bool found = false;
    for (size_t i = 0; i < space.size(); ++i)
      if (space[i].vals == target.vals) {
        member[i] = 1;
        found = true;
      }
    REQUIRE(found);
  }
  return member;
}

}  // namespace

TEST_CASE("text format") {
  PartialVector v;
  v.n = 2;
  v.p = 2;
  v.vals = {-1, 1};
  CHECK(format_pv(v) == "·1");
  CHECK(parse_pv("·1", 2) == v);
  CHECK_THROWS_AS(parse_pv("2", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_pv("x", 3), std::invalid_argument);
}

TEST_CASE("space enumeration") {
  CHECK(enumerate_space(2, 1, 2).size() == 8);
  CHECK(enumerate_space(1, 0, 2).size() == 2);
  CHECK(enumerate_space(1, 1, 3).size() == 4);
  CHECK_THROWS_AS(enumerate_space(2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_space(2, 3, 2), std::invalid_argument);

  // order: domain bitmask ascending, then values
  const auto space = enumerate_space(2, 1, 2);
  std::vector<std::string> texts;
  for (const auto& v : space) texts.push_back(format_pv(v));
  CHECK(texts == std::vector<std::string>{"0·", "1·", "·0", "·1", "00", "01",
                                          "10", "11"});
}

TEST_CASE("is_full worked examples") {
  // the empty function alone is full (empty restrictions)
  {
    const auto member = members_of({"·"}, 1, 1, 2);
    const auto cert = is_full(member, 1, 1, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->a_mask == 0);
    CHECK(revalidate_certificate(*cert, member, 1, 1, 2));
  }
  // a single total function is not full
  CHECK_FALSE(is_full(members_of({"0"}, 1, 1, 2), 1, 1, 2).has_value());
  // both totals are full: shift hits one of them for every residue
  CHECK(is_full(members_of({"0", "1"}, 1, 1, 2), 1, 1, 2).has_value());
  // the entire space is full
  {
    const auto space = enumerate_space(2, 1, 2);
    const std::vector<char> all(space.size(), 1);
    const auto cert = is_full(all, 2, 1, 2);
    REQUIRE(cert.has_value());
    CHECK(revalidate_certificate(*cert, all, 2, 1, 2));
  }
}

TEST_CASE("is_full agrees with the definition-unfolding oracle on all 256 subsets") {
  const auto space = enumerate_space(2, 1, 2);
  REQUIRE(space.size() == 8);
  for (unsigned sub = 0; sub < 256; ++sub) {
    std::vector<char> member(8);
    for (int i = 0; i < 8; ++i) member[i] = (sub >> i) & 1;
    const auto cert = is_full(member, 2, 1, 2);
    CHECK(cert.has_value() == oracles::full_by_unfolding(member, 2, 1, 2));
    if (cert) CHECK(revalidate_certificate(*cert, member, 2, 1, 2));
  }
}

TEST_CASE("fullness is monotone under inclusion") {
  for (unsigned sub = 0; sub < 256; ++sub) {
    std::vector<char> member(8);
    for (int i = 0; i < 8; ++i) member[i] = (sub >> i) & 1;
    if (!is_full(member, 2, 1, 2)) continue;
    for (int extra = 0; extra < 8; ++extra) {
      auto larger = member;
      larger[extra] = 1;
      CHECK(is_full(larger, 2, 1, 2).has_value());
    }
  }
}

TEST_CASE("fullness is invariant under total translations") {
  const auto space = enumerate_space(2, 1, 2);
  for (unsigned sub = 0; sub < 256; ++sub) {
    std::vector<char> member(8);
    for (int i = 0; i < 8; ++i) member[i] = (sub >> i) & 1;
    for (int s0 = 0; s0 < 2; ++s0)
      for (int s1 = 0; s1 < 2; ++s1) {
        std::vector<char> shifted(8, 0);
        for (size_t i = 0; i < space.size(); ++i) {
          if (!member[i]) continue;
          PartialVector moved = space[i];
          const int shift[2] = {s0, s1};
          for (int c = 0; c < 2; ++c)
            if (moved.vals[c] >= 0) moved.vals[c] = (moved.vals[c] + shift[c]) % 2;
          for (size_t j = 0; j < space.size(); ++j)
            if (space[j].vals == moved.vals) shifted[j] = 1;
        }
        CHECK(is_full(member, 2, 1, 2).has_value() == is_full(shifted, 2, 1, 2).has_value());
      }
  }
}

TEST_CASE("fs_instance_check trivial and desk-scale cases") {
  // one color always holds
  CHECK(fs_instance_check({{2, 1, 1}}, 1).holds);
  CHECK(fs_instance_check({{2, 1, 2}}, 1).holds);

  // n = 1: the class containing the empty function is always full
  const auto r1 = fs_instance_check({{2, 1, 1}}, 2);
  CHECK(r1.colorings_checked == 8);
  CHECK(r1.holds);

  // n = 2 sweep over all 256 colorings
  const auto r2 = fs_instance_check({{2, 1, 2}}, 2);
  CHECK(r2.colorings_checked == 256);
  if (!r2.holds) {
    // a reported counterexample means neither class contains a full set
    REQUIRE(r2.counterexample >= 0);
    for (int v = 0; v < 2; ++v) {
      std::vector<char> in_class(8);
      for (int e = 0; e < 8; ++e) in_class[e] = r2.counterexample_colors[e] == v;
      CHECK_FALSE(is_full(in_class, 2, 1, 2).has_value());
    }
  }
}

TEST_CASE("fs_instance_check caps the sweep") {
  CHECK(fs_instance_check({{2, 1, 2}}, 2, 16).inconclusive);
}

TEST_CASE("fs_instance_check handles two factors") {
  // two single-coordinate factors; the empty function per factor keeps
  // every coloring satisfiable only if a monochromatic product exists
  const auto r = fs_instance_check({{2, 1, 1}, {2, 1, 1}}, 2, 1 << 20);
  CHECK(r.colorings_checked == 512);
  // verdict is whatever the sweep finds; determinism across engines is the contract
  const auto again = fs_instance_check({{2, 1, 1}, {2, 1, 1}}, 2, 1 << 20, false);
  CHECK(r.holds == again.holds);
  CHECK(r.counterexample == again.counterexample);
}

TEST_CASE("prime validation") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}
