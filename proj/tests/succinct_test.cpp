#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "posheap/succinct/bitvector.hpp"
#include "posheap/succinct/depth_sequence.hpp"
#include "posheap/succinct/paren_tree.hpp"

using namespace posheap;
using namespace posheap::succinct;

namespace {

Bitvector bits_of(const std::string& s) {
  std::vector<bool> b;
  for (char c : s) b.push_back(c == '1');
  return Bitvector(b);
}

const std::vector<std::uint32_t> kD0 = {1, 2, 3, 1, 2, 4, 3, 2, 1, 4, 3, 2, 3, 2};
const std::vector<std::uint32_t> kE0 = {1, 1, 2, 2, 3, 3, 4, 1, 2, 2, 3, 4, 2, 3};

// Heap of abaababbabbab$ with stars placed by maximal reach (one per suffix,
// in rank order). Derived from the definition, see suffix_heap_test for the
// suffix-heap stream.
const char* kHeapStars = "((*)((*)((*)**((**))))((*)(*((*)**))((**))))";

}  // namespace

TEST(Bitvector, RankExamples) {
  const auto bv = bits_of("101101");
  EXPECT_EQ(bv.rank(6, true), 4u);
  EXPECT_EQ(bv.rank(0, true), 0u);
  EXPECT_EQ(bv.rank(3, false), 1u);
  EXPECT_THROW(bv.rank(7, true), RangeError);
}

TEST(Bitvector, SelectExamples) {
  const auto bv = bits_of("101101");
  EXPECT_EQ(bv.select(3, true), 4u);
  EXPECT_EQ(bv.select(1, false), 2u);
  EXPECT_THROW(bv.select(0, true), NotFoundError);
  EXPECT_THROW(bv.select(3, false), NotFoundError);
}

TEST(Bitvector, EmptyVector) {
  Bitvector bv(std::vector<bool>{});
  EXPECT_EQ(bv.size(), 0u);
  EXPECT_EQ(bv.rank(0, true), 0u);
  EXPECT_THROW(bv.select(1, true), NotFoundError);
}

TEST(Bitvector, RandomAgainstCounting) {
  std::mt19937_64 rng(7);
  for (std::size_t len : {1u, 63u, 64u, 65u, 511u, 512u, 513u, 3000u}) {
    for (double density : {0.02, 0.5, 0.97}) {
      std::bernoulli_distribution coin(density);
      std::vector<bool> b(len);
      for (std::size_t i = 0; i < len; ++i) b[i] = coin(rng);
      Bitvector bv(b);
      std::size_t ones = 0;
      for (std::size_t p = 1; p <= len; ++p) {
        ones += b[p - 1];
        ASSERT_EQ(bv.rank(p, true), ones);
        ASSERT_EQ(bv.rank(p, false), p - ones);
        ASSERT_EQ(bv[p], b[p - 1]);
        ASSERT_EQ(bv.rank(bv.select(bv.rank(p, b[p - 1]), b[p - 1]), b[p - 1]), bv.rank(p, b[p - 1]));
        ASSERT_EQ(bv.select(bv.rank(p, b[p - 1]), b[p - 1]), p);
      }
      std::stringstream ss;
      bv.write(ss);
      auto back = Bitvector::read(ss);
      for (std::size_t p = 0; p <= len; ++p) ASSERT_EQ(back.rank(p, true), bv.rank(p, true));
    }
  }
}

TEST(DepthSequence, WorkedExampleArrays) {
  DepthSequence d(kD0), e(kE0);
  EXPECT_EQ(d.access(8), 2u);
  EXPECT_EQ(d.access(1), 1u);
  EXPECT_EQ(e.access(9), 2u);
  EXPECT_EQ(d.partial_rank(8), 3u);
  EXPECT_EQ(e.partial_rank(9), 3u);
  EXPECT_EQ(d.partial_rank(1), 1u);
  EXPECT_EQ(d.select(2, 3), 8u);
  EXPECT_EQ(e.select(2, 3), 9u);
  EXPECT_THROW(d.select(5, 1), NotFoundError);
  EXPECT_THROW(d.access(0), RangeError);
  EXPECT_THROW(d.access(15), RangeError);
}

TEST(DepthSequence, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 500;
    const auto h = static_cast<std::uint32_t>(1 + rng() % std::min<std::size_t>(40, n));  // depths never exceed n
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = 1 + static_cast<std::uint32_t>(rng() % h);
    DepthSequence ds(v);
    for (std::size_t i = 1; i <= n; ++i) {
      ASSERT_EQ(ds.access(i), v[i - 1]);
      ASSERT_EQ(ds.select(ds.access(i), ds.partial_rank(i)), i);
    }
    std::stringstream ss;
    ds.write(ss);
    EXPECT_EQ(DepthSequence::read(ss), ds);
  }
}

TEST(DepthSequence, RejectsZero) { EXPECT_THROW(DepthSequence({1, 0}), ValidationError); }

TEST(ParenTree, ParseAndValidate) {
  EXPECT_THROW(ParenTree::parse(""), ValidationError);
  EXPECT_THROW(ParenTree::parse("(()"), ValidationError);
  EXPECT_THROW(ParenTree::parse("()()"), ValidationError);
  EXPECT_THROW(ParenTree::parse("*()"), ValidationError);
  EXPECT_THROW(ParenTree::parse(")("), ValidationError);
  const auto t = ParenTree::parse("( ( * ) )");
  EXPECT_EQ(t.node_count(), 2u);
  EXPECT_EQ(t.star_count(), 1u);
  EXPECT_EQ(t.enclosing_node(1), 1u);
  EXPECT_EQ(t.to_string(), "((*))");
}

TEST(ParenTree, HeapStreamQueries) {
  const auto t = ParenTree::parse(kHeapStars);
  EXPECT_EQ(t.node_count(), 15u);
  EXPECT_EQ(t.star_count(), 14u);
  // Preorder labels 0,14,1,3,4,12,6,9,2,13,5,8,11,7,10: rank 1 is 14, rank 11 is 8.
  EXPECT_EQ(t.enclosing_node(1), 1u);
  EXPECT_EQ(t.enclosing_node(12), 11u);
  EXPECT_THROW(t.enclosing_node(0), RangeError);
  EXPECT_THROW(t.enclosing_node(15), RangeError);
  for (std::size_t k = 1; k <= 14; ++k) {
    EXPECT_EQ(t.enclosing_node(k), oracle::enclosing_by_stack(kHeapStars, k)) << k;
  }
}

TEST(ParenTree, StarToOpenRank) {
  const auto t = ParenTree::parse("((*)(*(*(*(*))((**))))(*(*(*((**))))((**))))");
  EXPECT_EQ(t.star_to_open_rank(6), 7u);
  EXPECT_EQ(t.star_to_open_rank(1), 1u);
  EXPECT_EQ(t.star_to_open_rank(14), 14u);
  EXPECT_THROW(t.star_to_open_rank(15), RangeError);
}

// Random trees: navigation against the parent array, stars against the stack
// scan, and the parse/print round trip.
TEST(ParenTree, RandomTreesAgainstOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % (trial < 30 ? 40 : 900);
    std::vector<std::uint32_t> parents(n, 0);
    for (std::size_t t = 1; t < n; ++t) {
      // Mix of deep chains and bushy nodes.
      parents[t] = (rng() % 3 == 0) ? static_cast<std::uint32_t>(t - 1) : static_cast<std::uint32_t>(rng() % t);
    }
    // Make parents consistent with preorder: children of the same parent
    // must come after the whole subtree of earlier siblings. Rebuild via DFS.
    std::vector<std::vector<std::uint32_t>> kids(n);
    for (std::size_t t = 1; t < n; ++t) kids[parents[t]].push_back(static_cast<std::uint32_t>(t));
    std::vector<std::uint32_t> pre_parent;
    std::vector<std::uint32_t> rank_of(n);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{0, 0}};
    while (!stack.empty()) {
      auto [v, par] = stack.back();
      stack.pop_back();
      rank_of[v] = static_cast<std::uint32_t>(pre_parent.size());
      pre_parent.push_back(v == 0 ? 0 : rank_of[par]);
      for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back({*it, v});
    }
    const auto tree = ParenTree::from_preorder_parents(pre_parent);
    ASSERT_EQ(tree.node_count(), n);
    ASSERT_EQ(tree.length(), 2 * n);
    ASSERT_EQ(tree.to_preorder_parents(), pre_parent);
    ASSERT_EQ(ParenTree::parse(tree.to_string()), tree);

    std::vector<std::size_t> sizes(n, 1), depth(n, 0);
    for (std::size_t t = n; t-- > 1;) sizes[pre_parent[t]] += sizes[t];
    for (std::size_t t = 1; t < n; ++t) depth[t] = depth[pre_parent[t]] + 1;
    for (std::size_t t = 0; t < n; ++t) {
      ASSERT_EQ(tree.subtree_size(t), sizes[t]);
      ASSERT_EQ(tree.depth(t), depth[t]);
      ASSERT_EQ(tree.find_close(tree.open_of(t)), tree.open_of(t) + 2 * sizes[t] - 1);
      if (t > 0) ASSERT_EQ(tree.parent(t).value(), pre_parent[t]);
      else ASSERT_FALSE(tree.parent(t).has_value());
    }

    // Sprinkle stars at random positions inside the root pair.
    std::string s = tree.to_string();
    const std::size_t stars = rng() % (2 * n + 1);
    for (std::size_t k = 0; k < stars; ++k) {
      const std::size_t at = 1 + rng() % (s.size() - 1);
      s.insert(s.begin() + static_cast<long>(at), '*');
    }
    const auto starred = ParenTree::parse(s);
    ASSERT_EQ(starred.star_count(), stars);
    ASSERT_EQ(starred.without_stars(), tree);
    for (std::size_t k = 1; k <= stars; ++k) {
      ASSERT_EQ(starred.enclosing_node(k), oracle::enclosing_by_stack(s, k));
    }
    std::stringstream ss;
    starred.write(ss);
    ASSERT_EQ(ParenTree::read(ss), starred);
  }
}

TEST(ParenTree, ReadRejectsGarbage) {
  std::stringstream ss;
  ParenTree::parse("(()())").write(ss);
  std::string bytes = ss.str();
  bytes[bytes.size() - 1] = static_cast<char>(0xff);
  std::stringstream bad(bytes);
  EXPECT_THROW(ParenTree::read(bad), CorruptionError);
  std::stringstream truncated(bytes.substr(0, 5));
  EXPECT_THROW(ParenTree::read(truncated), CorruptionError);
}
