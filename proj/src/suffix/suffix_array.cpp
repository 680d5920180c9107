#include "posheap/suffix/suffix_array.hpp"

#include <algorithm>

namespace posheap::suffix {

namespace {

// SA-IS over s[0..n) with s[n-1] the unique minimum 0 and values < alphabet.
// Writes 0-based suffix starts into sa.
void sais(std::span<const std::int32_t> s, std::span<std::int32_t> sa, std::int32_t alphabet) {
  const auto n = static_cast<std::int32_t>(s.size());
  if (n == 1) {
    sa[0] = 0;
    return;
  }
  std::vector<bool> stype(static_cast<std::size_t>(n));
  stype[n - 1] = true;
  for (std::int32_t i = n - 2; i >= 0; --i) {
    stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  }
  auto is_lms = [&](std::int32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

  std::vector<std::int32_t> counts(static_cast<std::size_t>(alphabet), 0);
  for (auto c : s) ++counts[c];
  std::vector<std::int32_t> bucket(static_cast<std::size_t>(alphabet));
  auto bucket_ends = [&] {
    std::int32_t sum = 0;
    for (std::int32_t c = 0; c < alphabet; ++c) bucket[c] = (sum += counts[c]);
  };
  auto bucket_starts = [&] {
    std::int32_t sum = 0;
    for (std::int32_t c = 0; c < alphabet; ++c) {
      bucket[c] = sum;
      sum += counts[c];
    }
  };
  auto induce = [&] {
    bucket_starts();
    for (std::int32_t i = 0; i < n; ++i) {
      const std::int32_t j = sa[i] - 1;
      if (sa[i] > 0 && !stype[j]) sa[bucket[s[j]]++] = j;
    }
    bucket_ends();
    for (std::int32_t i = n - 1; i >= 0; --i) {
      const std::int32_t j = sa[i] - 1;
      if (sa[i] > 0 && stype[j]) sa[--bucket[s[j]]] = j;
    }
  };

  std::fill(sa.begin(), sa.end(), -1);
  bucket_ends();
  for (std::int32_t i = 1; i < n; ++i) {
    if (is_lms(i)) sa[--bucket[s[i]]] = i;
  }
  induce();

  std::int32_t lms_count = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    if (is_lms(sa[i])) sa[lms_count++] = sa[i];
  }
  std::fill(sa.begin() + lms_count, sa.end(), -1);
  std::int32_t names = 0;
  std::int32_t prev = -1;
  for (std::int32_t i = 0; i < lms_count; ++i) {
    const std::int32_t pos = sa[i];
    bool differs = false;
    for (std::int32_t d = 0; d < n; ++d) {
      if (prev == -1 || s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
        differs = true;
        break;
      }
      if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
    }
    if (differs) {
      ++names;
      prev = pos;
    }
    sa[lms_count + pos / 2] = names - 1;
  }
  for (std::int32_t i = n - 1, j = n - 1; i >= lms_count; --i) {
    if (sa[i] >= 0) sa[j--] = sa[i];
  }

  std::span<std::int32_t> reduced = sa.subspan(static_cast<std::size_t>(n - lms_count));
  std::span<std::int32_t> reduced_sa = sa.first(static_cast<std::size_t>(lms_count));
  if (names < lms_count) {
    std::vector<std::int32_t> copy(reduced.begin(), reduced.end());
    sais(copy, reduced_sa, names);
  } else {
    for (std::int32_t i = 0; i < lms_count; ++i) reduced_sa[reduced[i]] = i;
  }

  for (std::int32_t i = 1, j = 0; i < n; ++i) {
    if (is_lms(i)) reduced[j++] = i;
  }
  for (std::int32_t i = 0; i < lms_count; ++i) reduced_sa[i] = reduced[reduced_sa[i]];
  std::fill(sa.begin() + lms_count, sa.end(), -1);
  bucket_ends();
  for (std::int32_t i = lms_count - 1; i >= 0; --i) {
    const std::int32_t j = sa[i];
    sa[i] = -1;
    sa[--bucket[s[j]]] = j;
  }
  induce();
}

}  // namespace

std::vector<std::uint32_t> build_sa_array(const TerminatedText& text) {
  const auto symbols = text.symbols();
  std::vector<Symbol> distinct(symbols.begin(), symbols.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::int32_t> s(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    s[i] = static_cast<std::int32_t>(std::lower_bound(distinct.begin(), distinct.end(), symbols[i]) - distinct.begin());
  }
  std::vector<std::int32_t> sa0(symbols.size());
  sais(s, sa0, static_cast<std::int32_t>(distinct.size()));
  std::vector<std::uint32_t> sa(symbols.size() + 1, 0);
  for (std::size_t i = 0; i < sa0.size(); ++i) sa[i + 1] = static_cast<std::uint32_t>(sa0[i] + 1);
  return sa;
}

std::vector<std::uint32_t> build_lcp(const TerminatedText& text, std::span<const std::uint32_t> sa,
                                     std::span<const std::uint32_t> isa) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> lcp(n + 1, 0);
  std::size_t h = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t r = isa[i];
    if (r == 1) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[r - 1];
    while (i + h <= n && j + h <= n && text[i + h] == text[j + h]) ++h;
    lcp[r] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

SuffixArrayBundle build_sa(const TerminatedText& text) {
  SuffixArrayBundle b;
  b.sa = build_sa_array(text);
  b.isa.assign(b.sa.size(), 0);
  for (std::size_t r = 1; r < b.sa.size(); ++r) b.isa[b.sa[r]] = static_cast<std::uint32_t>(r);
  b.lcp = build_lcp(text, b.sa, b.isa);
  return b;
}

}  // namespace posheap::suffix
