#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posheap/text.hpp"

namespace posheap::parallel {

using Pattern = std::vector<Symbol>;
using Hits = std::vector<std::uint32_t>;

/// One search per pattern, in order. `search` is any callable
/// (std::span<const Symbol>) -> Hits that is safe to call concurrently.
template <class Search>
std::vector<Hits> batch_search_serial(const std::vector<Pattern>& patterns, Search&& search) {
  std::vector<Hits> out(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) out[i] = search(std::span<const Symbol>(patterns[i]));
  return out;
}

template <class Search>
std::vector<Hits> batch_search_omp(const std::vector<Pattern>& patterns, Search&& search, int threads = 0) {
  std::vector<Hits> out(patterns.size());
  const auto n = static_cast<long>(patterns.size());
  if (threads > 0) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long i = 0; i < n; ++i) out[i] = search(std::span<const Symbol>(patterns[i]));
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) out[i] = search(std::span<const Symbol>(patterns[i]));
  }
  return out;
}

/// Occurrence counts only; the reduction is the part worth parallelising
/// when results are not kept.
template <class Search>
std::uint64_t total_occurrences_omp(const std::vector<Pattern>& patterns, Search&& search) {
  std::uint64_t total = 0;
  const auto n = static_cast<long>(patterns.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (long i = 0; i < n; ++i) total += search(std::span<const Symbol>(patterns[i])).size();
  return total;
}

/// Naive scan, the reference every index is checked against.
Hits scan_occurrences(const TerminatedText& text, std::span<const Symbol> pattern);

int max_threads();

}  // namespace posheap::parallel
