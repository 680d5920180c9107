#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posheap/bridge/simulated_heap.hpp"
#include "posheap/heap/search.hpp"
#include "posheap/parallel/batch_search.hpp"
#include "posheap/sheap/suffix_heap.hpp"

using namespace posheap;
using parallel::Pattern;

namespace {

std::vector<Pattern> patterns_for(std::mt19937_64& rng, const TerminatedText& t, unsigned sigma, std::size_t count) {
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t m = 1 + rng() % 10;
    out.push_back(i % 2 ? oracle::sampled_pattern(rng, t, m) : oracle::random_pattern(rng, m, sigma));
  }
  return out;
}

}  // namespace

TEST(Parallel, ScanMatchesOracle) {
  std::mt19937_64 rng(1);
  const auto t = oracle::random_text(rng, 500, 2);
  for (int q = 0; q < 50; ++q) {
    const auto p = oracle::sampled_pattern(rng, t, 1 + rng() % 6);
    EXPECT_EQ(parallel::scan_occurrences(t, p), oracle::occurrences(t, p));
  }
  EXPECT_TRUE(parallel::scan_occurrences(t, {}).empty());
}

TEST(Parallel, OmpEqualsSerialForEveryVariant) {
  std::mt19937_64 rng(2);
  for (unsigned sigma : {2u, 4u, 26u}) {
    const auto t = oracle::random_text(rng, 3000, sigma);
    const auto bundle = suffix::build_sa(t);
    const auto h = heap::build_naive(t);
    auto sa = std::make_shared<bridge::PlainSAAccess>(bundle);
    const auto sim = bridge::SimulatedHeap::build(h, t, sa);
    const suffix::SuffixTree st(t, bundle);
    const auto sh = sheap::build_suffix_heap(st, bundle, t, sa);
    const auto pats = patterns_for(rng, t, sigma, 400);

    const auto ref = parallel::batch_search_serial(pats, [&](auto p) { return parallel::scan_occurrences(t, p); });
    auto heap_fn = [&](auto p) { return heap::search(h, p); };
    auto sim_fn = [&](auto p) { return bridge::simulated_search(sim, p); };
    auto sheap_fn = [&](auto p) { return sheap::sheap_search(sh, p); };
    EXPECT_EQ(parallel::batch_search_serial(pats, heap_fn), ref);
    EXPECT_EQ(parallel::batch_search_omp(pats, heap_fn), ref);
    EXPECT_EQ(parallel::batch_search_omp(pats, heap_fn, 3), ref);
    EXPECT_EQ(parallel::batch_search_omp(pats, sim_fn), ref);
    EXPECT_EQ(parallel::batch_search_omp(pats, sheap_fn), ref);
    std::uint64_t total = 0;
    for (const auto& r : ref) total += r.size();
    EXPECT_EQ(parallel::total_occurrences_omp(pats, heap_fn), total);
  }
  EXPECT_GE(parallel::max_threads(), 1);
}
