#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posheap/heap/search.hpp"
#include "posheap/sheap/suffix_heap.hpp"

using namespace posheap;
using namespace posheap::sheap;

namespace {

const TerminatedText kS0 = TerminatedText::from_display("abaababbabbab$");
// Stars after the open of node maxreach(i); same labels, nesting and stars as
// the displayed example string once its three missing closes are restored.
const char* kS0Stream = "((*)(*(*(*(*))((**))))(*(*(*((**))))((**))))";

struct Fixture {
  TerminatedText text;
  suffix::SuffixArrayBundle bundle;
  suffix::SuffixTree st;
  SuffixHeap heap;

  explicit Fixture(TerminatedText t)
      : text(std::move(t)), bundle(suffix::build_sa(text)), st(text, bundle), heap(build_suffix_heap(st, bundle, text)) {}
};

}  // namespace

TEST(SuffixHeap, WorkedExampleStream) {
  Fixture f(kS0);
  EXPECT_EQ(f.heap.augmented().to_string(), kS0Stream);
  EXPECT_TRUE(f.heap.verify(kS0).ok) << f.heap.verify(kS0).invariant;
  const std::vector<std::uint32_t> parents = {0, 0, 0, 2, 3, 4, 3, 6, 0, 8, 9, 10, 11, 8, 13};
  EXPECT_EQ(f.heap.augmented().to_preorder_parents(), parents);
  // Root children are $, a and b.
  EXPECT_EQ(f.heap.augmented().children(0), (std::vector<std::size_t>{1, 2, 8}));
  EXPECT_EQ(f.heap.augmented().children(3), (std::vector<std::size_t>{4, 6}));
}

TEST(SuffixHeap, MaximalReachExamples) {
  Fixture f(kS0);
  EXPECT_EQ(f.heap.maximal_reach(6), 7u);
  EXPECT_EQ(f.heap.maximal_reach(11), 12u);
  const std::vector<Label> want = {1, 2, 3, 4, 5, 7, 7, 8, 9, 10, 12, 12, 14, 14};
  for (Label i = 1; i <= 14; ++i) EXPECT_EQ(f.heap.maximal_reach(i), want[i - 1]) << i;
  EXPECT_THROW(f.heap.maximal_reach(0), RangeError);
  EXPECT_THROW(f.heap.maximal_reach(15), RangeError);
}

TEST(SuffixHeap, EdgeLabels) {
  Fixture f(kS0);
  EXPECT_EQ(f.heap.depth(13), 2u);
  EXPECT_EQ(f.heap.sa_access().sa(13), 10u);
  EXPECT_EQ(f.heap.sa_access().isa(11), 10u);
  EXPECT_EQ(f.heap.edge_label(13), Symbol('b'));
  EXPECT_EQ(f.heap.edge_label(1), kTerminator);
  EXPECT_EQ(f.heap.edge_label(8), Symbol('b'));
  EXPECT_THROW(f.heap.edge_label(0), RangeError);
  EXPECT_THROW(f.heap.edge_label(15), RangeError);
  EXPECT_EQ(f.heap.child(0, 'a'), std::optional<Label>(2));
  EXPECT_EQ(f.heap.child(0, 'c'), std::nullopt);
}

TEST(SuffixHeap, SearchWalkthrough) {
  Fixture f(kS0);
  heap::SearchTrace trace;
  EXPECT_EQ(sheap_search(f.heap, pattern_from_display("aabab"), &trace), std::vector<std::uint32_t>{3});
  ASSERT_GE(trace.rounds.size(), 2u);
  EXPECT_EQ(trace.rounds[0].node_label, 2u);
  EXPECT_EQ(trace.rounds[0].depth, 1u);
  // Candidate 2 shifts to SA^-1[SA[2]+1] = 5.
  EXPECT_EQ(f.heap.sa_access().isa(f.heap.sa_access().sa(2) + 1), 5u);
  EXPECT_EQ(trace.rounds[1].node_label, 5u);
  EXPECT_EQ(sheap_search(f.heap, pattern_from_display("ab")), (std::vector<std::uint32_t>{1, 4, 6, 9, 12}));
  EXPECT_EQ(sheap_search(f.heap, pattern_from_display("abba")), (std::vector<std::uint32_t>{6, 9}));
  EXPECT_EQ(sheap_search(f.heap, pattern_from_display("$")), std::vector<std::uint32_t>{14});
  EXPECT_THROW(sheap_search(f.heap, std::vector<Symbol>{}), UsageError);
}

TEST(SuffixHeap, MatchesTrieOracle) {
  std::mt19937_64 rng(3);
  for (unsigned sigma : {1u, 2u, 4u, 26u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto t = oracle::random_text(rng, rng() % 600, sigma);
      Fixture f(t);
      const oracle::TrieHeap ref(t, f.bundle.sa);
      const auto labels = ref.preorder_labels();
      for (std::size_t k = 0; k < labels.size(); ++k) ASSERT_EQ(labels[k], k) << "label is not preorder";
      const auto parents = f.heap.augmented().to_preorder_parents();
      for (Label j = 1; j <= t.size(); ++j) {
        ASSERT_EQ(parents[j], ref.parent_label(j));
        ASSERT_EQ(f.heap.depth(j), ref.by_label[j]->depth);
        ASSERT_EQ(f.heap.maximal_reach(j), ref.max_reach[j]);
      }
      ASSERT_TRUE(f.heap.verify(t).ok) << f.heap.verify(t).invariant;
    }
  }
}

TEST(SuffixHeap, SearchAgainstScan) {
  std::mt19937_64 rng(77);
  for (unsigned sigma : {1u, 2u, 4u, 26u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto t = oracle::random_text(rng, rng() % 2000, sigma);
      Fixture f(t);
      const auto ph = heap::build_naive(t);
      for (int q = 0; q < 20; ++q) {
        const std::size_t m = 1 + rng() % 12;
        const auto p = q % 2 ? oracle::sampled_pattern(rng, t, m) : oracle::random_pattern(rng, m, sigma);
        const auto got = sheap_search(f.heap, p);
        ASSERT_EQ(got, oracle::occurrences(t, p));
        ASSERT_EQ(got, heap::search(ph, p));
      }
    }
  }
}

TEST(SuffixHeap, SmallTexts) {
  for (const char* s : {"$", "a$", "aaaa$", "ba$"}) {
    Fixture f(TerminatedText::from_display(s));
    EXPECT_TRUE(f.heap.verify(f.text).ok) << s;
    EXPECT_EQ(f.heap.node_count(), f.text.size() + 1);
  }
  Fixture f(TerminatedText::from_display("$"));
  EXPECT_EQ(f.heap.augmented().to_string(), "((*))");
}

TEST(SuffixHeap, VerifyCatchesWrongStars) {
  Fixture f(kS0);
  // Move star 6 back into node 6: same shape, wrong maximal reach.
  const SuffixHeap broken(std::make_shared<bridge::PlainSAAccess>(f.bundle),
                          succinct::ParenTree::parse("((*)(*(*(*(*))(*(*))))(*(*(*((**))))((**))))"), f.heap.first_chars());
  const auto r = broken.verify(kS0);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.invariant, "maximal-reach");
}

TEST(SuffixHeap, SpaceIsLinear) {
  std::mt19937_64 rng(12);
  const auto t = oracle::random_text(rng, 200000, 4);
  Fixture f(t);
  const double bits_per_symbol = static_cast<double>(f.heap.space().total()) / static_cast<double>(t.size());
  EXPECT_LT(bits_per_symbol, 16.0);
  EXPECT_GT(bits_per_symbol, 6.0);  // three symbols of two bits per position
}

TEST(SuffixHeap, ShapeWorkSpace) {
  std::mt19937_64 rng(5);
  const auto t = oracle::random_text(rng, 5000, 2);
  const auto b = suffix::build_sa(t);
  const suffix::SuffixTree st(t, b);
  const auto shape = build_shape(st);
  EXPECT_EQ(shape.parent.size(), t.size() + 1);
  EXPECT_GT(shape.peak_stack, 0u);
  EXPECT_EQ(sheap_augmented_parens(shape).without_stars(), succinct::ParenTree::from_preorder_parents(shape.parent));
}
