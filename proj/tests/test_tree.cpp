#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "oracles.hpp"
#include "ramsey/tree.hpp"

using namespace ramsey;

TEST_CASE("encode/decode basics") {
  CHECK(OrderedTree().encode() == "()");
  CHECK(OrderedTree::decode("(()())").encode() == "(()())");
  CHECK(OrderedTree::decode("((()))").encode() == "((()))");
  CHECK(OrderedTree::decode("(()(()))").encode() == "(()(()))");

  CHECK_THROWS_WITH_AS(OrderedTree::decode(""), doctest::Contains("empty"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedTree::decode("(()"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedTree::decode("())"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedTree::decode("()()"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedTree::decode(")("), std::invalid_argument);
  CHECK_THROWS_AS(OrderedTree::decode("(a)"), std::invalid_argument);
}

TEST_CASE("decode/encode round-trips on all trees up to 7 nodes") {
  for (const auto& t : enumerate_trees(7)) {
    CHECK(OrderedTree::decode(t.encode()) == t);
  }
}

TEST_CASE("from_parents validates preorder form") {
  CHECK(OrderedTree::from_parents({-1, 0, 0}).encode() == "(()())");
  CHECK_THROWS_AS(OrderedTree::from_parents({-1, 0, 0, 1}), std::invalid_argument);  // not preorder
  CHECK(OrderedTree::from_parents({-1, 0, 1, 0}).encode() == "((())())");
  CHECK_THROWS_AS(OrderedTree::from_parents({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedTree::from_parents({}), std::invalid_argument);
}

TEST_CASE("meet") {
  const auto cherry = OrderedTree::decode("(()())");
  CHECK(cherry.meet(1, 2) == 0);
  CHECK(cherry.meet(1, 1) == 1);
  const auto path3 = OrderedTree::decode("((()))");
  CHECK(path3.meet(0, 2) == 0);
  CHECK(path3.meet(1, 2) == 1);
  const auto twigs = OrderedTree::decode("((())(()))");
  CHECK(twigs.meet(2, 4) == 0);
  CHECK(twigs.meet(1, 2) == 1);
  CHECK_THROWS_AS(cherry.meet(0, 5), std::out_of_range);
}

TEST_CASE("lex_compare agrees with the case-based definition on all trees up to 6 nodes") {
  for (const auto& t : enumerate_trees(6))
    for (int v = 0; v < t.size(); ++v)
      for (int w = 0; w < t.size(); ++w)
        CHECK(t.lex_compare(v, w) == t.lex_compare_casewise(v, w));
}

TEST_CASE("lex_compare basics") {
  const auto cherry = OrderedTree::decode("(()())");
  CHECK(cherry.lex_compare(0, 1) == std::strong_ordering::less);
  CHECK(cherry.lex_compare(1, 2) == std::strong_ordering::less);
  CHECK(cherry.lex_compare(2, 2) == std::strong_ordering::equal);
  CHECK_THROWS_AS(cherry.lex_compare(3, 0), std::out_of_range);
}

TEST_CASE("initial_segment") {
  const auto cherry = OrderedTree::decode("(()())");
  CHECK(cherry.initial_segment(cherry.size() - 1) == cherry);
  CHECK(cherry.initial_segment(0) == OrderedTree());
  CHECK(cherry.initial_segment(1).encode() == "(())");

  for (const auto& t : enumerate_trees(6))
    for (int w = 0; w < t.size(); ++w) {
      const auto seg = t.initial_segment(w);
      CHECK(seg.size() == w + 1);
      // predecessor-closed prefix: parents agree with the host tree
      for (int v = 1; v <= w; ++v) CHECK(seg.parent(v) == t.parent(v));
    }
}

TEST_CASE("enumeration counts match the Catalan recurrence") {
  const auto all = enumerate_trees(5);
  std::map<int, int> by_size;
  for (const auto& t : all) ++by_size[t.size()];
  for (int n = 1; n <= 5; ++n) CHECK(by_size[n] == oracles::catalan(n - 1));

  for (int n = 1; n <= 5; ++n) CHECK((int)binary_trees(n).size() == oracles::catalan(n - 1));

  CHECK(binary_trees(2).size() == 1);
  CHECK(binary_trees(2)[0].encode() == "(()())");
}

TEST_CASE("enumeration is sorted and duplicate-free") {
  const auto all = enumerate_trees(6);
  for (size_t i = 1; i < all.size(); ++i) {
    CHECK(tree_less(all[i - 1], all[i]));
  }
}

TEST_CASE("norm_leq") {
  const auto p2 = OrderedTree::decode("(())");
  const auto cherry = OrderedTree::decode("(()())");
  const auto p3 = OrderedTree::decode("((()))");
  CHECK(norm_leq(cherry, cherry));
  CHECK(norm_leq(p2, cherry));
  CHECK_FALSE(norm_leq(cherry, p3));
  CHECK(norm_leq(p2, p3));
}

TEST_CASE("norm_leq is a partial order on trees up to 5 nodes") {
  const auto all = enumerate_trees(5);
  for (const auto& a : all) {
    CHECK(norm_leq(a, a));
    for (const auto& b : all) {
      if (norm_leq(a, b) && norm_leq(b, a)) CHECK(a == b);
      for (const auto& c : all)
        if (norm_leq(a, b) && norm_leq(b, c)) CHECK(norm_leq(a, c));
    }
  }
}

TEST_CASE("leaves are reported in lexicographic order") {
  const auto t = OrderedTree::decode("((()())())");
  CHECK(t.leaves() == std::vector<int>{2, 3, 4});
  CHECK(t.leaf_count() == 3);
  CHECK(t.is_binary());
  CHECK_FALSE(OrderedTree::decode("(()()())").is_binary());
}
