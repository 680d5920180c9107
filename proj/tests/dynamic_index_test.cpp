#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posheap/dynamic/limited_index.hpp"

using namespace posheap;
using namespace posheap::dynamic;

namespace {

const TerminatedText kS0 = TerminatedText::from_display("abaababbabbab$");

std::vector<Symbol> syms(const std::string& s) { return pattern_from_display(s); }

std::vector<Symbol> shadow_of(const TerminatedText& t) { return {t.symbols().begin(), t.symbols().end()}; }

void expect_healthy(const LimitedIndex& x, bool coverage = true) {
  const auto layout = x.check_layout(coverage);
  ASSERT_TRUE(layout.ok) << layout.invariant << ": " << layout.detail;
  const auto heap = x.verify_heap();
  ASSERT_TRUE(heap.ok) << heap.invariant << ": " << heap.detail;
}

}  // namespace

TEST(DynamicText, MatchesVectorUnderRandomEdits) {
  std::mt19937_64 rng(5);
  std::vector<Symbol> shadow;
  DynamicText t;
  for (int op = 0; op < 3000; ++op) {
    if (shadow.empty() || rng() % 3 != 0) {
      const std::size_t pos = 1 + rng() % (shadow.size() + 1);
      std::vector<Symbol> add(1 + rng() % 20);
      for (auto& c : add) c = rng() % 8 == 0 ? kDividerBase + static_cast<Symbol>(rng() % 100) : 'a' + rng() % 3;
      t.insert(pos, add);
      shadow.insert(shadow.begin() + static_cast<long>(pos - 1), add.begin(), add.end());
    } else {
      const std::size_t pos = 1 + rng() % shadow.size();
      const std::size_t len = std::min<std::size_t>(1 + rng() % 25, shadow.size() - pos + 1);
      t.erase(pos, len);
      shadow.erase(shadow.begin() + static_cast<long>(pos - 1), shadow.begin() + static_cast<long>(pos - 1 + len));
    }
    ASSERT_EQ(t.check(), "");
    ASSERT_EQ(t.size(), shadow.size());
    if (op % 50 == 0) {
      ASSERT_EQ(t.to_vector(), shadow);
      std::size_t divs = 0, plain = 0;
      for (std::size_t r = 1; r <= shadow.size(); ++r) {
        const auto h = t.at(r);
        ASSERT_EQ(t.rank(h), r);
        ASSERT_EQ(t.symbol(h), shadow[r - 1]);
        if (is_divider(shadow[r - 1])) {
          ASSERT_EQ(t.select_divider(++divs), h);
        } else {
          ASSERT_EQ(t.select_plain(++plain), h);
        }
        ASSERT_EQ(t.dividers_through(r), divs);
        if (r < shadow.size()) ASSERT_EQ(t.next(h), t.at(r + 1));
      }
      ASSERT_LE(t.height(), 2 * 64u);
    }
  }
}

TEST(DynamicText, SplitAndJoin) {
  std::vector<Symbol> v(100);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 'a' + i % 26;
  DynamicText t(v);
  EXPECT_THROW(t.insert(102, v), RangeError);
  EXPECT_THROW(t.erase(90, 20), RangeError);
  EXPECT_THROW(t.at(0), RangeError);
  EXPECT_THROW(t.select_divider(1), NotFoundError);
  EXPECT_EQ(t.slice(3, 4), (std::vector<Symbol>{'c', 'd', 'e', 'f'}));
}

TEST(LimitedIndex, WorkedExampleLayout) {
  auto x = LimitedIndex::new_limited(kS0, 3);
  EXPECT_EQ(x.render_s_prime(), "abaaba#1bbabba#2b$");
  EXPECT_EQ(x.render_s_double_prime(), "ababba#3bbab$");
  EXPECT_EQ(x.s_prime_dividers(), 2u);
  EXPECT_EQ(x.s_double_prime_dividers(), 1u);
  expect_healthy(x);
  EXPECT_EQ(x.current_string().display(), kS0.display());
}

TEST(LimitedIndex, WorkedExampleInsert) {
  auto x = LimitedIndex::new_limited(kS0, 3);
  x.insert_substring(5, syms("bba"));
  EXPECT_EQ(x.current_string().display(), "abaabbababbabbab$");
  EXPECT_EQ(x.render_s_prime(), "abaabbaba#1bbabba#2b$");
  EXPECT_EQ(x.render_s_double_prime(), "ababba#3bbab$");
  expect_healthy(x);
  // And back.
  x.delete_substring(5, 3);
  EXPECT_EQ(x.current_string().display(), kS0.display());
  EXPECT_EQ(x.render_s_prime(), "abaaba#1bbabba#2b$");
  EXPECT_EQ(x.render_s_double_prime(), "ababba#3bbab$");
  expect_healthy(x);
  const auto fresh = LimitedIndex::new_limited(kS0, 3);
  for (const char* p : {"a", "b", "ab", "ba", "aba", "bab", "b$", "$"}) {
    EXPECT_EQ(x.search_limited(syms(p)), fresh.search_limited(syms(p))) << p;
  }
}

TEST(LimitedIndex, ShortText) {
  const auto x = LimitedIndex::new_limited(TerminatedText::from_display("ab"), 3);
  EXPECT_EQ(x.render_s_prime(), "ab$");
  EXPECT_EQ(x.render_s_double_prime(), "");
  EXPECT_EQ(x.s_prime_dividers(), 0u);
  EXPECT_EQ(x.s_double_prime_dividers(), 0u);
  expect_healthy(x);
  EXPECT_EQ(x.search_limited(syms("ab")), std::vector<std::uint32_t>{1});
  EXPECT_THROW(LimitedIndex::new_limited(kS0, 0), UsageError);
}

TEST(LimitedIndex, TwelveMBlocks) {
  std::mt19937_64 rng(9);
  const std::size_t M = 4;
  std::string s;
  for (std::size_t i = 0; i + 1 < 12 * M; ++i) s += static_cast<char>('a' + rng() % 2);
  const auto x = LimitedIndex::new_limited(TerminatedText::from_display(s), M);
  ASSERT_EQ(x.text_size(), 12 * M);
  EXPECT_EQ(x.s_prime_dividers(), 5u);   // six blocks of 2M
  EXPECT_EQ(x.s_double_prime_dividers(), 4u);  // five windows of 2M
  expect_healthy(x);
}

TEST(LimitedIndex, SearchExamples) {
  const auto x = LimitedIndex::new_limited(kS0, 3);
  // Oracle first: "aba" occurs at 1 and 4 only.
  EXPECT_EQ(oracle::occurrences(kS0, syms("aba")), (std::vector<std::uint32_t>{1, 4}));
  EXPECT_EQ(x.search_limited(syms("aba")), (std::vector<std::uint32_t>{1, 4}));
  // bab at 5 straddles the first divider of S' and is found through S''.
  EXPECT_EQ(oracle::occurrences(kS0, syms("bab")), (std::vector<std::uint32_t>{5, 8, 11}));
  EXPECT_EQ(x.search_limited(syms("bab")), (std::vector<std::uint32_t>{5, 8, 11}));
  EXPECT_EQ(x.search_limited(std::vector<Symbol>{kDividerBase + 1}), std::vector<std::uint32_t>{});
  EXPECT_THROW(x.search_limited(syms("abab")), UsageError);
  EXPECT_THROW(x.search_limited(std::vector<Symbol>{}), UsageError);
}

TEST(LimitedIndex, EditErrors) {
  auto x = LimitedIndex::new_limited(kS0, 3);
  EXPECT_THROW(x.insert_substring(0, syms("a")), RangeError);
  EXPECT_THROW(x.insert_substring(15, syms("a")), RangeError);
  EXPECT_THROW(x.delete_substring(10, 10), RangeError);
  EXPECT_THROW(x.delete_substring(13, 2), UsageError);
  EXPECT_THROW(x.insert_substring(2, std::vector<Symbol>{kTerminator}), ValidationError);
  x.insert_substring(3, {});
  EXPECT_EQ(x.last_touch(), 0u);
  x.delete_substring(3, 0);
  EXPECT_EQ(x.current_string().display(), kS0.display());
  x.insert_substring(14, syms("zz"));  // before the terminator
  EXPECT_EQ(x.current_string().display(), "abaababbabbabzz$");
  expect_healthy(x);
}

TEST(LimitedIndex, LongInsertSplitsHost) {
  std::mt19937_64 rng(17);
  for (std::size_t M : {1u, 2u, 3u, 8u}) {
    auto text = oracle::random_text(rng, 10 * M, 3);
    auto x = LimitedIndex::new_limited(text, M);
    auto shadow = shadow_of(text);
    std::vector<Symbol> t(10 * M);
    for (auto& c : t) c = 'a' + rng() % 3;
    const std::size_t before = x.s_prime_dividers();
    const std::size_t pos = M + 1;  // block interior
    x.insert_substring(pos, t);
    shadow.insert(shadow.begin() + static_cast<long>(pos - 1), t.begin(), t.end());
    EXPECT_GE(x.s_prime_dividers(), before + 5) << M;
    EXPECT_EQ(x.current_string().symbols().size(), shadow.size());
    expect_healthy(x);
  }
}

TEST(LimitedIndex, DeleteWholeMiddleBlock) {
  std::mt19937_64 rng(23);
  const std::size_t M = 3;
  const auto text = oracle::random_text(rng, 60, 2);
  auto x = LimitedIndex::new_limited(text, M);
  const std::size_t before = x.s_prime_dividers();
  x.delete_substring(5, 14);  // block 2 plus fringes of blocks 1 and 3
  auto shadow = shadow_of(text);
  shadow.erase(shadow.begin() + 4, shadow.begin() + 18);
  EXPECT_EQ(x.current_string().symbols().size(), shadow.size());
  EXPECT_LT(x.s_prime_dividers(), before);
  expect_healthy(x);
}

TEST(LimitedIndex, RandomEditScripts) {
  std::mt19937_64 rng(2718);
  std::size_t max_height_over_m = 0, queries = 0;
  double worst_touch_ratio = 0;
  for (int script = 0; script < 200; ++script) {
    const std::size_t M = std::array<std::size_t, 4>{1, 2, 3, 8}[script % 4];
    const unsigned sigma = std::array<unsigned, 3>{1, 2, 4}[script % 3];
    const auto text = oracle::random_text(rng, rng() % 300, sigma);
    auto x = LimitedIndex::new_limited(text, M);
    auto shadow = shadow_of(text);
    const int ops = 1 + static_cast<int>(rng() % 50);
    for (int op = 0; op < ops; ++op) {
      const std::size_t n = shadow.size();
      const auto kind = rng() % 3;
      std::size_t ell = 0;
      if (kind == 0 && n < 1000) {
        const std::size_t pos = 1 + rng() % n;
        std::vector<Symbol> t(rng() % 4 == 0 ? rng() % (12 * M) : rng() % (2 * M + 1));
        for (auto& c : t) c = 'a' + rng() % sigma;
        x.insert_substring(pos, t);
        shadow.insert(shadow.begin() + static_cast<long>(pos - 1), t.begin(), t.end());
        ell = t.size();
      } else if (kind == 1 && n > 1) {
        const std::size_t pos = 1 + rng() % (n - 1);
        const std::size_t len = std::min<std::size_t>(rng() % (rng() % 4 == 0 ? 12 * M : 2 * M + 1), n - pos);
        x.delete_substring(pos, len);
        shadow.erase(shadow.begin() + static_cast<long>(pos - 1), shadow.begin() + static_cast<long>(pos - 1 + len));
        ell = len;
      } else {
        const auto t = TerminatedText(shadow);
        const std::size_t m = 1 + rng() % M;
        const auto p = rng() % 2 ? oracle::sampled_pattern(rng, t, m) : oracle::random_pattern(rng, m, sigma);
        ASSERT_EQ(x.search_limited(p), oracle::occurrences(t, p)) << "script " << script << " op " << op;
        ++queries;
        continue;
      }
      ASSERT_EQ(x.current_string().symbols().size(), shadow.size());
      ASSERT_TRUE(std::equal(shadow.begin(), shadow.end(), x.current_string().symbols().begin()));
      expect_healthy(x, shadow.size() <= 500);
      if (ell > 0) worst_touch_ratio = std::max(worst_touch_ratio, double(x.last_touch()) / double(M + ell));
      max_height_over_m = std::max(max_height_over_m, x.height() > 4 * M + 1 ? x.height() : 0);
      ASSERT_LE(x.height(), 8 * M + 4);
    }
    // Every pattern drawn from the final text.
    const auto t = TerminatedText(shadow);
    for (int q = 0; q < 10; ++q) {
      const auto p = oracle::sampled_pattern(rng, t, 1 + rng() % M);
      ASSERT_EQ(x.search_limited(p), oracle::occurrences(t, p));
      ++queries;
    }
  }
  // Height survey: nothing above 4M+1 was ever seen.
  EXPECT_EQ(max_height_over_m, 0u);
  EXPECT_LE(worst_touch_ratio, 40.0);
  RecordProperty("worst_touch_ratio", std::to_string(worst_touch_ratio));
  RecordProperty("queries", std::to_string(queries));
  std::printf("worst touch/(M+l) = %.2f over %zu queries\n", worst_touch_ratio, queries);
}

TEST(LimitedIndex, WorkingStringRoundTrip) {
  auto x = LimitedIndex::new_limited(kS0, 3);
  x.insert_substring(5, syms("bba"));
  const auto w = x.working_string();
  const auto y = LimitedIndex::from_working_string(w, 3, x.next_divider());
  EXPECT_EQ(y.working_string(), w);
  EXPECT_EQ(y.render_s_prime(), x.render_s_prime());
  expect_healthy(y);
  auto bad = w;
  bad[8] = 'b';  // S[9] sits in the first window too; S' and S'' now disagree
  EXPECT_THROW(LimitedIndex::from_working_string(bad, 3, x.next_divider()), CorruptionError);
  EXPECT_THROW(LimitedIndex::from_working_string(w, 3, kDividerBase), CorruptionError);
}
