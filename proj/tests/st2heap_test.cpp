#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posheap/heap/st2heap.hpp"
#include "posheap/suffix/suffix_array.hpp"

using namespace posheap;
using namespace posheap::heap;
using posheap::suffix::SuffixTree;

namespace {

const TerminatedText kS0 = TerminatedText::from_display("abaababbabbab$");

}  // namespace

TEST(St2Heap, WorkedExample) {
  const SuffixTree st(kS0, suffix::build_sa(kS0));
  ConversionStats stats;
  const auto h = suffix_tree_to_heap(st, kS0, &stats);
  EXPECT_EQ(h, build_naive(kS0));
  // Label 6 (path abb) also falls mid-edge: abb is neither branching nor a
  // whole suffix. Checked against a brute-force suffix-trie replay.
  EXPECT_EQ(stats.split_labels, (std::vector<Label>{3, 6, 7, 9, 10}));
  EXPECT_TRUE(stats.marks_monotone);
  EXPECT_EQ(stats.st2_checksum_before, stats.st2_checksum_after);
  EXPECT_GT(stats.scan_lookups + stats.level_ancestor_lookups, 0u);
  // The root of S0's tree has three children, so the st2 route is taken.
  EXPECT_GT(stats.level_ancestor_lookups, 0u);
}

TEST(St2Heap, TwoSymbols) {
  const auto t = TerminatedText::from_display("a$");
  const SuffixTree st(t, suffix::build_sa(t));
  ConversionStats stats;
  const auto h = suffix_tree_to_heap(st, t, &stats);
  EXPECT_EQ(h.node_count(), 3u);
  // Heap node 1 is "a", halfway down the leaf edge "a$".
  EXPECT_EQ(stats.split_labels, std::vector<Label>{1});
  EXPECT_EQ(h, build_naive(t));
}

TEST(St2Heap, DistinctLettersSplitAtRoot) {
  const auto t = TerminatedText::from_display("abc$");
  const SuffixTree st(t, suffix::build_sa(t));
  ConversionStats stats;
  // abc$, bc$ and c$ hang off the root as leaves; each gets its depth-1
  // heap node by a split. $ is already a depth-1 leaf.
  EXPECT_EQ(suffix_tree_to_heap(st, t, &stats), build_naive(t));
  EXPECT_EQ(stats.split_labels, (std::vector<Label>{1, 2, 3}));
}

TEST(St2Heap, TerminatorOnly) {
  const TerminatedText t;
  const SuffixTree st(t, suffix::build_sa(t));
  EXPECT_EQ(suffix_tree_to_heap(st, t), build_naive(t));
}

TEST(St2Heap, MismatchedText) {
  const SuffixTree st(kS0, suffix::build_sa(kS0));
  EXPECT_THROW(suffix_tree_to_heap(st, TerminatedText::from_display("ab$")), ValidationError);
}

// Label 12 lands on an existing tree node; that step must not split.
TEST(St2Heap, NoSplitAtTwelve) {
  const SuffixTree st(kS0, suffix::build_sa(kS0));
  ConversionStats stats;
  suffix_tree_to_heap(st, kS0, &stats);
  EXPECT_EQ(std::count(stats.split_labels.begin(), stats.split_labels.end(), 12u), 0);
}

TEST(OverlayState, ChildTowardRoutesAgree) {
  const SuffixTree st(kS0, suffix::build_sa(kS0));
  OverlayState state(st);
  for (std::uint32_t u = 0; u < st.node_count(); ++u) {
    if (st.is_leaf(u)) continue;
    for (std::size_t r = st.lo(u); r <= st.hi(u); ++r) {
      const auto leaf = st.leaf_of_rank(r);
      const auto a = state.child_toward_scan(u, leaf);
      const auto b = state.child_toward_level_ancestor(u, leaf);
      EXPECT_EQ(a, b);
      EXPECT_EQ(st.parent(a), u);
    }
  }
  // Root toward the leaf of position 1 lands in the 'a' subtree.
  const auto a_child = state.child_toward(0, st.leaf_of_position(1));
  EXPECT_EQ(st.path_char(a_child, 0), Symbol('a'));
  const auto leaf = st.leaf_of_position(1);
  EXPECT_EQ(state.child_toward(st.parent(leaf), leaf), leaf);
  EXPECT_THROW(state.child_toward_scan(leaf, st.leaf_of_position(2)), UsageError);
  EXPECT_THROW(state.child_toward_level_ancestor(a_child, st.leaf_of_position(14)), UsageError);
}

TEST(OverlayState, SplitConservesLabels) {
  const SuffixTree st(kS0, suffix::build_sa(kS0));
  OverlayState state(st);
  const auto leaf = st.leaf_of_position(3);  // aababbabbab$
  const auto u = state.child_toward(0, leaf);  // "a"
  const auto v = state.child_toward(u, leaf);  // the leaf itself
  ASSERT_EQ(v, leaf);
  const auto x = state.split_edge(u, v);
  EXPECT_EQ(state.string_depth1(x), 2u);
  EXPECT_EQ(state.parent1(v), x);
  EXPECT_EQ(state.parent1(x), u);
  EXPECT_EQ(state.child_toward(u, leaf), x);
  EXPECT_EQ(state.child_toward(x, leaf), v);
  EXPECT_EQ(state.bottom(x), v);
  EXPECT_THROW(state.split_edge(u, x), UsageError);  // length-1 edge
  const auto y = state.split_edge(x, v);  // split again below the new node
  EXPECT_EQ(state.child_toward(x, leaf), y);
  EXPECT_EQ(state.string_depth1(y), 3u);
  // Walking up from the leaf still reaches the root and string depths drop.
  std::uint32_t w = leaf;
  while (w != 0) {
    const auto p = state.parent1(w);
    EXPECT_LT(state.string_depth1(p), state.string_depth1(w));
    w = p;
  }
}

TEST(St2Heap, RandomTextsEqualNaive) {
  std::mt19937_64 rng(99);
  for (unsigned sigma : {2u, 4u, 26u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto t = oracle::random_text(rng, rng() % 1000, sigma);
      const SuffixTree st(t, suffix::build_sa(t));
      ConversionStats stats;
      const auto h = suffix_tree_to_heap(st, t, &stats);
      ASSERT_EQ(h, build_naive(t));
      ASSERT_TRUE(stats.marks_monotone);
      ASSERT_EQ(stats.st2_checksum_before, stats.st2_checksum_after);
    }
  }
}

TEST(St2Heap, UnaryAlphabet) {
  for (std::size_t len : {0u, 1u, 2u, 7u, 64u}) {
    const auto t = TerminatedText::from_bytes(std::string(len, 'a'));
    const SuffixTree st(t, suffix::build_sa(t));
    ASSERT_EQ(suffix_tree_to_heap(st, t), build_naive(t)) << len;
  }
}
