#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posheap/text.hpp"

namespace posheap::suffix {

/// SA, SA^-1 and LCP of a terminated text, all 1-based: sa[0], isa[0] and
/// lcp[0] are unused padding so that sa[i] reads like SA[i].
struct SuffixArrayBundle {
  std::vector<std::uint32_t> sa;
  std::vector<std::uint32_t> isa;
  std::vector<std::uint32_t> lcp;  // lcp[1] = 0

  std::size_t size() const noexcept { return sa.empty() ? 0 : sa.size() - 1; }
};

/// Suffix array by induced sorting (SA-IS), O(n) time.
std::vector<std::uint32_t> build_sa_array(const TerminatedText& text);

/// Kasai et al. LCP from SA and SA^-1.
std::vector<std::uint32_t> build_lcp(const TerminatedText& text, std::span<const std::uint32_t> sa,
                                     std::span<const std::uint32_t> isa);

SuffixArrayBundle build_sa(const TerminatedText& text);

}  // namespace posheap::suffix
